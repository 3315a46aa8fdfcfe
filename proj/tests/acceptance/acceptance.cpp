// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "../support/systems.hpp"
#include "tars/bases.hpp"
#include "tars/canon.hpp"
#include "tars/io.hpp"
#include "tars/oracle.hpp"
#include "tars/weyl.hpp"

using namespace tars;
using tars::testing::same_set;
using tars::testing::systems_up_to;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::ostringstream note;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string describe(const SystemDescriptor& sys) {
  return std::string(family_slug(sys.family)) + "(" + std::to_string(sys.m) + "," + std::to_string(sys.n) + ")";
}

std::vector<CanonicalParams> zero_k_representatives(const SystemDescriptor& sys, Form f, std::mt19937_64& rng) {
  std::vector<CanonicalParams> out;
  for (int sign : {1, -1}) {
    auto p = random_params(sys, f, rng, 0);
    p.sign = sign;
    out.push_back(p);
  }
  return out;
}

// Every params sample of the grid: zero k with both signs, then seeded random
// k vectors in [-2, 2]. Small rank systems get every k vector exhaustively.
std::vector<CanonicalParams> params_grid(const SystemDescriptor& sys, Form f, std::mt19937_64& rng, int random_per_sign) {
  auto out = zero_k_representatives(sys, f, rng);
  const auto ell = static_cast<std::size_t>(sys.ell());
  if (ell <= 2) {
    auto base = random_params(sys, f, rng, 0);
    std::vector<Int> ks(ell, -2);
    for (;;) {
      for (int sign : {1, -1}) {
        CanonicalParams p = base;
        p.ks = ks;
        p.sign = sign;
        try {
          validate_params(sys, p);
          out.push_back(p);
        } catch (const Error&) {
        }
      }
      std::size_t i = 0;
      while (i < ell && ks[i] == 2) ks[i++] = -2;
      if (i == ell) break;
      ++ks[i];
    }
  }
  for (int sign : {1, -1})
    for (int i = 0; i < random_per_sign; ++i) {
      auto p = random_params(sys, f, rng, 2);
      p.sign = sign;
      out.push_back(p);
    }
  return out;
}

Outcome ac1() {
  Outcome o;
  std::mt19937_64 rng(1);
  std::size_t checked = 0;
  for (const auto& sys : systems_up_to(4))
    for (Form f : valid_forms(sys))
      for (const auto& p : params_grid(sys, f, rng, 12)) {
        ++checked;
        const auto c = is_base(build_base(sys, p));
        if (c.verdict != Verdict::Certified) o.fail(describe(sys) + " " + to_json(p).dump() + " -> " + std::string(to_string(c.verdict)));
      }
  o.note << checked << " canonical bases";
  return o;
}

Outcome ac2() {
  Outcome o;
  std::mt19937_64 rng(2);
  std::size_t checked = 0;
  for (const auto& sys : systems_up_to(4))
    for (Form f : valid_forms(sys)) {
      if (f == Form::T2A4 || f == Form::T2D2) continue;
      for (const auto& p : params_grid(sys, f, rng, 6)) {
        ++checked;
        if (!same_set(positive_roots(build_base(sys, p), 4), predicted_positive_roots(sys, p, 4)))
          o.fail(describe(sys) + " " + to_json(p).dump());
      }
    }
  o.note << checked << " parameterizations";
  return o;
}

Outcome ac3() {
  Outcome o;
  const SystemDescriptor systems[] = {
      SystemDescriptor::make(Family::AEvenOdd2, 1, 1), SystemDescriptor::make(Family::AEvenEven4, 1, 1),
      SystemDescriptor::make(Family::AEvenEven4, 0, 1), SystemDescriptor::make(Family::D2, 1, 1),
      SystemDescriptor::make(Family::AOddOdd2, 2, 1)};
  std::mt19937_64 rng(3);
  for (const auto& sys : systems) {
    SearchOptions opts;
    opts.kmax_entry = 1;
    opts.kmax_root = 6;
    const auto res = search_bases(sys, opts);
    std::size_t certified = 0;
    for (const auto& fb : res.bases) {
      if (fb.params) ++certified;
      else o.fail(describe(sys) + " unrecognized base " + to_json(fb.base).dump());
    }
    for (Form f : valid_forms(sys))
      for (const auto& p : zero_k_representatives(sys, f, rng)) {
        const Base want = build_base(sys, p);
        bool found = false;
        for (const auto& fb : res.bases) found = found || fb.base.same_set(want);
        if (!found) o.fail(describe(sys) + " missing " + to_json(p).dump());
      }
    o.note << describe(sys) << ": " << certified << "/" << res.bases.size() << " certified; ";
  }
  return o;
}

Outcome ac4() {
  Outcome o;
  std::mt19937_64 rng(4);
  std::size_t checked = 0;
  for (const auto& sys : systems_up_to(4)) {
    if (sys.family != Family::AOddOdd2) continue;
    for (Form f : valid_forms(sys)) {
      if (f == Form::B1) continue;
      for (int i = 0; i < 100; ++i) {
        const auto p = random_params(sys, f, rng, 2);
        const Base input = build_base(sys, p);
        const auto fine = make_fine(sys, p);
        const auto adm = make_admissible(sys, fine.params);
        const ReflectionWord w = adm.word.then_after(fine.word);
        ++checked;
        const std::string tag = describe(sys) + " " + to_json(p).dump();
        if (!is_fine(adm.params) || adm.params.form != f) o.fail(tag + ": not fine or form changed");
        if (admissible_prefix(adm.params) != static_cast<std::size_t>(sys.ell())) o.fail(tag + ": not l-admissible");
        if (!same_set(apply_word(w, input.elements), adm.base.elements)) o.fail(tag + ": word does not map input to output");
        if (!check_preserves_R(w, sys, 5)) o.fail(tag + ": word leaves R");
      }
    }
  }
  o.note << checked << " normalizations";
  return o;
}

Outcome ac5() {
  Outcome o;
  std::mt19937_64 rng(5);
  std::size_t same = 0, cross = 0;
  for (const auto& sys : systems_up_to(4)) {
    if (sys.family != Family::AOddOdd2) continue;
    std::vector<Form> forms;
    for (Form f : valid_forms(sys))
      if (f != Form::B1) forms.push_back(f);
    for (Form f : forms)
      for (int i = 0; i < 50; ++i) {
        auto p = random_params(sys, f, rng, 2);
        auto q = random_params(sys, f, rng, 2);
        q.sign = p.sign;
        const Base b = build_base(sys, p), bp = build_base(sys, q);
        ++same;
        const auto w = conjugacy_word(b, bp);
        if (!same_set(apply_word(w, bp.elements), b.elements))
          o.fail(describe(sys) + " " + to_json(p).dump() + " vs " + to_json(q).dump());
      }
    for (Form f : valid_forms(sys))
      for (Form g : valid_forms(sys)) {
        if (f == g) continue;
        for (int i = 0; i < 5; ++i) {
          ++cross;
          const Base b = build_base(sys, random_params(sys, f, rng, 2));
          const Base bp = build_base(sys, random_params(sys, g, rng, 2));
          if (are_conjugate(b, bp)) o.fail(describe(sys) + " cross-form pair reported conjugate");
        }
      }
  }
  o.note << same << " same-form pairs, " << cross << " cross-form pairs";
  return o;
}

Outcome ac6() {
  Outcome o;
  std::size_t checked = 0;
  for (const auto& sys : systems_up_to(4)) {
    if (sys.m < 1 || sys.n < 1) continue;
    ++checked;
    const Symbol e1{SymbolKind::Eps, 1}, d1{SymbolKind::Del, 1};
    const Vector alpha = Vector::unit(sys.m, sys.n, e1) - Vector::unit(sys.m, sys.n, d1);
    const Vector image = reflect(alpha, FormTag::Star, Vector::unit(sys.m, sys.n, d1, 2));
    const Vector two_e1 = Vector::unit(sys.m, sys.n, e1, 2);
    if (image != two_e1) o.fail(describe(sys) + ": image is " + to_text(image));
    // Every family places 2 eps_i at a nonzero delta level only.
    if (is_root(sys, two_e1)) o.fail(describe(sys) + ": 2e1 unexpectedly a root");
    if (!is_root(sys, Vector::unit(sys.m, sys.n, d1, 2)))
      o.fail(describe(sys) + ": 2d1 should be a root");
  }
  o.note << checked << " systems";
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t runs = 0;
  for (const auto& sys : systems_up_to(3))
    for (Int kmax = 1; kmax <= 3; ++kmax) {
      ++runs;
      PropertyOptions opts;
      opts.samples = 300;
      const auto rep = run_property_suite(sys, kmax, 7, opts);
      for (const auto& r : rep.results)
        if (r.counterexamples != 0)
          o.fail(describe(sys) + " kmax=" + std::to_string(kmax) + " " + r.id + ": " + r.witness.value_or(""));
    }
  o.note << runs << " suite runs";
  return o;
}

bool has_extra_long(const Base& b) {
  for (const auto& e : b.elements)
    if (contains(b.sys, e) == RootClass::ExtraLong) return true;
  return false;
}

Outcome ac8() {
  Outcome o;
  std::mt19937_64 rng(8);
  std::size_t with = 0, without = 0;
  for (auto [m, n] : {std::pair{1, 1}, std::pair{2, 1}}) {
    const auto sys = SystemDescriptor::make(Family::AEvenOdd2, m, n);
    std::vector<Base> bases;
    SearchOptions opts;
    opts.kmax_entry = 1;
    for (const auto& fb : search_bases(sys, opts).bases)
      if (fb.verdict == Verdict::Certified) bases.push_back(fb.base);
    for (Form f : valid_forms(sys))
      for (const auto& p : params_grid(sys, f, rng, 10)) bases.push_back(build_base(sys, p));
    for (const auto& b : bases) {
      if (is_base(b).verdict != Verdict::Certified) continue;
      const bool xl = has_extra_long(b);
      (xl ? with : without)++;
      const Subsystem sub = xl ? Subsystem::Auxiliary : Subsystem::Reduced;
      const auto c = is_base(b, 6, sub);
      if (c.verdict == Verdict::Rejected)
        o.fail(describe(sys) + " " + to_json(b).dump() + " not a base of " + std::string(to_string(sub)));
    }
  }
  o.note << with << " with an extra-long root, " << without << " without";
  return o;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"AC1 canonical bases certify", ac1},
      {"AC2 positive-root formulas match decomposition", ac2},
      {"AC3 exhaustive search is recognized and complete", ac3},
      {"AC4 fine and admissible normalization", ac4},
      {"AC5 conjugacy words and row separation", ac5},
      {"AC6 quasi-reflection leaves R", ac6},
      {"AC7 property suites have no counterexamples", ac7},
      {"AC8 extra-long dichotomy between S and T", ac8},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s: %s (%s; %.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", name, o.note.str().c_str(), secs,
                o.pass ? "" : " first failure: ", o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
