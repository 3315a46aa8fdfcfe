#include "tars/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "tars/io.hpp"

namespace tars {

// ---------------------------------------------------------------- search

namespace {

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

int extra_long_kind(const SystemDescriptor& sys, const Vector& v) {
  if (contains(sys, v) != RootClass::ExtraLong) return -1;
  return support(v).front().kind == SymbolKind::Eps ? 0 : 1;
}

class SubsetSearch {
 public:
  SubsetSearch(const SystemDescriptor& sys, const SearchOptions& opts) : sys_(sys), opts_(opts) {
    for (auto& v : enumerate(sys, opts.kmax_entry)) {
      if (v.is_imaginary() || in_twice_roots(sys, v)) continue;
      cand_.push_back(std::move(v));
    }
    window_ = enumerate(sys, opts.kmax_root);
    const std::size_t c = cand_.size();
    compat_.assign(c, std::vector<char>(c, 0));
    for (std::size_t i = 0; i < c; ++i)
      for (std::size_t j = i + 1; j < c; ++j) {
        const Vector diff = cand_[i] - cand_[j];
        const bool ok = !diff.is_zero() && !diff.is_imaginary() && !is_root(sys, diff);
        compat_[i][j] = compat_[j][i] = ok;
      }
    for (const auto& v : cand_) {
      std::uint32_t mask = 0;
      for (const Symbol& s : support(v))
        mask |= 1u << (s.kind == SymbolKind::Eps ? s.index - 1 : sys.m + s.index - 1);
      masks_.push_back(mask);
      kinds_.push_back(sys.family == Family::AOddOdd2 ? extra_long_kind(sys, v) : -1);
    }
  }

  SearchResult run() {
    const auto size = static_cast<std::size_t>(sys_.dim());
    result_.candidates = cand_.size();
    const std::uint64_t total = binomial_saturating(cand_.size(), size);
    if (total > opts_.budget)
      throw Error(ErrorKind::BudgetExceeded, "search_bases: C(" + std::to_string(cand_.size()) + ", " +
                                                 std::to_string(size) + ") = " + std::to_string(total) +
                                                 " exceeds the budget " + std::to_string(opts_.budget));
    chosen_.clear();
    dfs(0, 0, {0, 0});
    return std::move(result_);
  }

 private:
  void dfs(std::size_t from, std::uint32_t covered, std::array<int, 2> extra) {
    const auto size = static_cast<std::size_t>(sys_.dim());
    if (chosen_.size() == size) {
      ++result_.subsets_visited;
      if (covered != (1u << sys_.ell()) - 1) return;
      leaf();
      return;
    }
    for (std::size_t i = from; i < cand_.size(); ++i) {
      if (cand_.size() - i < size - chosen_.size()) break;
      bool ok = true;
      for (std::size_t c : chosen_)
        if (!compat_[c][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      auto e = extra;
      if (kinds_[i] >= 0 && ++e[static_cast<std::size_t>(kinds_[i])] > 1) continue;
      chosen_.push_back(i);
      dfs(i + 1, covered | masks_[i], e);
      chosen_.pop_back();
    }
  }

  void leaf() {
    Base b{sys_, {}};
    for (std::size_t c : chosen_) b.elements.push_back(cand_[c]);
    std::optional<Decomposer> dec;
    try {
      dec.emplace(b.elements);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Dependent) return;
      throw;
    }
    for (const auto& v : window_)
      if (!dec->admissible(v)) return;
    FoundBase f{b, Verdict::VerifiedAtCutoff, match_canonical(b)};
    if (f.params) f.verdict = Verdict::Certified;
    result_.bases.push_back(std::move(f));
  }

  SystemDescriptor sys_;
  SearchOptions opts_;
  std::vector<Vector> cand_;
  std::vector<Vector> window_;
  std::vector<std::vector<char>> compat_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> kinds_;
  std::vector<std::size_t> chosen_;
  SearchResult result_;
};

}  // namespace

SearchResult search_bases(const SystemDescriptor& sys, const SearchOptions& opts) {
  sys.validate();
  if (opts.kmax_entry < 0 || opts.kmax_root < 0) throw Error(ErrorKind::InvalidArgument, "search_bases: negative cutoff");
  if (sys.ell() > 31) throw Error(ErrorKind::OutOfScope, "search_bases: too many symbols");
  return SubsetSearch(sys, opts).run();
}

// ---------------------------------------------------------------- params

CanonicalParams random_params(const SystemDescriptor& sys, Form form, std::mt19937_64& rng, Int kspan) {
  const auto forms = valid_forms(sys);
  if (std::find(forms.begin(), forms.end(), form) == forms.end())
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(form)) + " is not realizable for this system");

  std::optional<SymbolKind> first, last;
  switch (form) {
    case Form::T2A2Long: first = SymbolKind::Eps; break;
    case Form::T2A2NoLong: first = SymbolKind::Del; break;
    case Form::B1:
    case Form::B4: first = SymbolKind::Del; last = SymbolKind::Eps; break;
    case Form::B2: first = last = SymbolKind::Del; break;
    case Form::B3: first = last = SymbolKind::Eps; break;
    default: break;
  }

  auto pick = [&](Int lo, Int hi) { return std::uniform_int_distribution<Int>(lo, hi)(rng); };
  CanonicalParams p;
  p.form = form;
  std::vector<Symbol> syms = all_symbols(sys.m, sys.n);
  for (;;) {
    std::shuffle(syms.begin(), syms.end(), rng);
    if (first && syms.front().kind != *first) continue;
    if (last && syms.back().kind != *last) continue;
    break;
  }
  for (const Symbol& s : syms) p.zetas.push_back({pick(0, 1) ? 1 : -1, s});
  const bool same_parity = form == Form::T2A4 || form == Form::T2D2;
  const Int parity = kspan == 0 ? 0 : pick(0, 1);
  for (std::size_t i = 0; i < syms.size(); ++i) {
    Int k = pick(-kspan, kspan);
    if (same_parity && floor_mod(k, 2) != parity) k += k < kspan ? 1 : -1;
    p.ks.push_back(k);
  }
  p.sign = pick(0, 1) ? 1 : -1;
  validate_params(sys, p);
  return p;
}

// ---------------------------------------------------------------- Dynkin search

namespace {

std::vector<std::pair<int, int>> dynkin_edges(const std::string& type, int& rank) {
  if (type == "D4") {
    rank = 4;
    return {{0, 1}, {0, 2}, {0, 3}};
  }
  int chain = 0;
  if (type == "E6") chain = 5;
  if (type == "E7") chain = 6;
  if (type == "E8") chain = 7;
  if (chain == 0) throw Error(ErrorKind::InvalidArgument, "unknown Dynkin type " + type);
  rank = chain + 1;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < chain; ++i) e.push_back({i, i + 1});
  e.push_back({2, chain});
  return e;
}

/// Distinct finite parts (delta dropped) of the roots; the star form ignores delta.
std::vector<Vector> finite_parts(const SystemDescriptor& sys) {
  std::set<Vector> s;
  for (auto v : enumerate(sys, 4)) {
    v.set_delta(0);
    if (!v.is_zero()) s.insert(v);
  }
  return {s.begin(), s.end()};
}

}  // namespace

std::optional<std::vector<Vector>> find_simply_laced_configuration(const SystemDescriptor& sys, const std::string& type,
                                                                   const StarForm& star_in) {
  const StarForm star = star_in ? star_in : StarForm(form_star);
  int rank = 0;
  const auto edges = dynkin_edges(type, rank);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(rank), std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (auto [a, b] : edges) adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;

  std::vector<Vector> pool;
  for (const auto& v : finite_parts(sys))
    if (star(v, v) == 2) pool.push_back(v);

  std::vector<Vector> chosen;
  std::function<bool()> rec = [&]() -> bool {
    const std::size_t i = chosen.size();
    if (i == static_cast<std::size_t>(rank)) return true;
    for (const auto& v : pool) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = star(v, chosen[j]) == -adj[i][j];
      if (!ok) continue;
      chosen.push_back(v);
      if (rec()) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (rec()) return chosen;
  return std::nullopt;
}

// ---------------------------------------------------------------- properties

bool PropertyReport::ok() const {
  return std::all_of(results.begin(), results.end(), [](const PropertyResult& r) { return r.counterexamples == 0; });
}

namespace {

struct Recorder {
  PropertyResult r;
  Recorder(std::string id, std::string statement, std::string mode) {
    r.id = std::move(id);
    r.statement = std::move(statement);
    r.mode = std::move(mode);
  }
  void sample() { ++r.samples; }
  void fail(const std::string& w) {
    if (r.counterexamples++ == 0) r.witness = w;
  }
};

std::string pair_text(const Vector& a, const Vector& b) { return "alpha=" + to_text(a) + ", beta=" + to_text(b); }

bool same_support(const Vector& a, const Vector& b) { return support(a) == support(b); }

bool supports_meet(const Vector& a, const Vector& b) {
  const auto sa = support(a), sb = support(b);
  return std::any_of(sa.begin(), sa.end(), [&](const Symbol& s) { return std::find(sb.begin(), sb.end(), s) != sb.end(); });
}

PropertyResult check_orthogonal_overlap(const std::vector<Vector>& roots, const StarForm& star) {
  Recorder rec{"orthogonal-overlap",
                "(a,b)_* = 0 and supports meet => equal supports of size 2 with opposite sign products",
                "exhaustive"};
  for (const auto& a : roots)
    for (const auto& b : roots) {
      if (star(a, b) != 0 || !supports_meet(a, b)) continue;
      rec.sample();
      const auto sa = support(a);
      bool ok = same_support(a, b) && sa.size() == 2;
      if (ok) {
        const int pa = sgn(sa[0], a) * sgn(sa[1], a);
        const int pb = sgn(sa[0], b) * sgn(sa[1], b);
        ok = pa == -pb;
      }
      if (!ok) rec.fail(pair_text(a, b));
    }
  return rec.r;
}

PropertyResult check_difference_sign(const SystemDescriptor& sys, const std::vector<Vector>& roots) {
  Recorder rec{"difference-sign", "supports differ and meet in {e} => (a - b in R <=> sgn(e;a) = sgn(e;b))", "exhaustive"};
  for (const auto& a : roots)
    for (const auto& b : roots) {
      if (same_support(a, b)) continue;
      const auto sa = support(a), sb = support(b);
      std::vector<Symbol> common;
      for (const auto& s : sa)
        if (std::find(sb.begin(), sb.end(), s) != sb.end()) common.push_back(s);
      if (common.size() != 1) continue;
      rec.sample();
      const bool diff_root = is_root(sys, a - b);
      const bool same_sign = sgn(common[0], a) == sgn(common[0], b);
      if (diff_root != same_sign) rec.fail(pair_text(a, b));
    }
  return rec.r;
}

PropertyResult check_three_orthogonal_neighbours(const std::vector<Vector>& roots, const StarForm& star, std::mt19937_64& rng,
                               std::uint64_t budget) {
  Recorder rec{"three-orthogonal-neighbours",
                "(a,b_i)_* != 0 for i=1..3 and b_i mutually orthogonal => two b_i share a support of size 2",
                "sampled"};
  if (roots.empty()) return rec.r;
  std::uniform_int_distribution<std::size_t> pick_root(0, roots.size() - 1);
  std::uint64_t attempts = 0;
  while (rec.r.samples < budget && attempts < budget * 20) {
    ++attempts;
    const Vector& a = roots[pick_root(rng)];
    std::vector<const Vector*> pool;
    for (const auto& b : roots)
      if (star(a, b) != 0) pool.push_back(&b);
    std::vector<const Vector*> bs;
    for (int step = 0; step < 3; ++step) {
      std::vector<const Vector*> next;
      for (const Vector* b : pool) {
        bool orth = true;
        for (const Vector* c : bs) orth = orth && star(*b, *c) == 0 && b != c;
        if (orth) next.push_back(b);
      }
      if (next.empty()) break;
      bs.push_back(next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)]);
    }
    if (bs.size() < 3) continue;
    rec.sample();
    bool ok = false;
    for (int i = 0; i < 3 && !ok; ++i)
      for (int j = i + 1; j < 3 && !ok; ++j)
        ok = same_support(*bs[static_cast<std::size_t>(i)], *bs[static_cast<std::size_t>(j)]) &&
             support(*bs[static_cast<std::size_t>(i)]).size() == 2;
    if (!ok)
      rec.fail("alpha=" + to_text(a) + ", beta=" + to_text(*bs[0]) + ", " + to_text(*bs[1]) + ", " + to_text(*bs[2]));
  }
  return rec.r;
}

std::vector<CanonicalParams> sample_params(const SystemDescriptor& sys, std::mt19937_64& rng, std::size_t per_form) {
  std::vector<CanonicalParams> out;
  for (Form f : valid_forms(sys))
    for (std::size_t i = 0; i < per_form; ++i) out.push_back(random_params(sys, f, rng, 3));
  return out;
}

PropertyResult check_extra_long_census(const SystemDescriptor& sys, const std::vector<Vector>& roots,
                                  const std::vector<CanonicalParams>& samples) {
  Recorder rec{"extra-long-census",
                "half-difference of same-kind extra-long roots lies in {0} u R; canonical bases meet each "
                "extra-long class at most once",
                "exhaustive+sampled"};
  // In D(m+1,n)^(2) the extra-long roots 2 delta_p sit at even levels only,
  // so half-differences land at odd levels, where pairs are absent; only the
  // census holds there.
  std::vector<Vector> xl;
  if (sys.family != Family::D2) {
    for (const auto& v : roots)
      if (contains(sys, v) == RootClass::ExtraLong) xl.push_back(v);
  } else {
    rec.r.mode = "sampled";
  }
  for (const auto& a : xl)
    for (const auto& b : xl) {
      if (a == b) continue;
      const Symbol sa = support(a).front(), sb = support(b).front();
      if (sa.kind != sb.kind) continue;
      rec.sample();
      const Int s = a.coord(sa) > 0 ? 1 : -1;
      const Int t = b.coord(sb) > 0 ? 1 : -1;
      const Vector twice = t * a - s * b;
      bool ok = true;
      Vector half(sys.m, sys.n);
      for (std::size_t i = 0; i < twice.coords().size(); ++i) {
        if (twice[i] % 2 != 0) ok = false;
        half[i] = twice[i] / 2;
      }
      ok = ok && (half.is_zero() || half.is_imaginary() || is_root(sys, half));
      if (!ok) rec.fail(pair_text(a, b));
    }
  for (const auto& p : samples) {
    rec.sample();
    const Base b = build_base(sys, p);
    int eps = 0, del = 0;
    for (const auto& e : b.elements) {
      if (contains(sys, e) != RootClass::ExtraLong) continue;
      (support(e).front().kind == SymbolKind::Eps ? eps : del)++;
    }
    if (eps > 1 || del > 1) rec.fail(to_json(p).dump());
  }
  return rec.r;
}

PropertyResult check_no_imaginary_or_double(const SystemDescriptor& sys, const std::vector<Vector>& roots,
                                  const std::vector<CanonicalParams>& samples) {
  Recorder rec{"no-imaginary-or-double",
                "canonical bases avoid Z delta and 2R; every real root alpha has alpha +- 4 delta in R",
                "exhaustive+sampled"};
  for (const auto& p : samples) {
    rec.sample();
    for (const auto& e : build_base(sys, p).elements)
      if (e.is_imaginary() || in_twice_roots(sys, e)) rec.fail(to_json(p).dump() + " element " + to_text(e));
  }
  for (const auto& a : roots) {
    if (a.is_imaginary()) continue;
    rec.sample();
    if (!is_root(sys, a.shifted(4)) || !is_root(sys, a.shifted(-4))) rec.fail("alpha=" + to_text(a));
  }
  return rec.r;
}

PropertyResult check_operators_preserve_R(const SystemDescriptor& sys, Int kmax) {
  Recorder rec{"operators-preserve-R", "I, J, S, T operator words send R into R (both directions) on the window", "exhaustive"};
  if (sys.family != Family::AOddOdd2) {
    rec.r.mode = "not-applicable";
    return rec.r;
  }
  std::vector<SignedSymbol> zs;
  for (const Symbol& s : all_symbols(sys.m, sys.n))
    for (int sign : {1, -1}) zs.push_back({sign, s});
  auto run = [&](const OperatorSpec& spec) {
    const ReflectionWord w = root_preserving_operator(sys, spec);
    rec.sample();
    if (!check_preserves_R(w, sys, kmax)) {
      std::string what = std::string(to_string(spec.kind)) + " zeta=" + to_text(spec.zeta);
      if (spec.eta) what += " eta=" + to_text(*spec.eta);
      rec.fail(what + " p=" + std::to_string(spec.p) + " q=" + std::to_string(spec.q));
    }
  };
  const Int span = 2;
  for (const auto& z : zs) {
    for (Int p = -span - 1; p <= span + 1; ++p) {
      const bool even = floor_mod(p, 2) == 0;
      if (even == (z.symbol.kind == SymbolKind::Del)) run({OperatorKind::I, z, std::nullopt, p, 0});
    }
    for (const auto& e : zs) {
      if (e.symbol == z.symbol) continue;
      for (Int p = -span; p <= span; ++p) {
        if (e.symbol.kind == z.symbol.kind) run({OperatorKind::J, z, e, p, 0});
        for (Int q = -span; q <= span; ++q) {
          run({OperatorKind::S, z, e, p, q});
          run({OperatorKind::T, z, e, p, q});
        }
      }
    }
  }
  return rec.r;
}

PropertyResult check_no_exceptional_graph(const SystemDescriptor& sys, const StarForm& star) {
  Recorder rec{"no-exceptional-graph", "no roots form an E6, E7 or E8 configuration under the star form", "exhaustive"};
  for (const char* t : {"E6", "E7", "E8"}) {
    rec.sample();
    if (auto w = find_simply_laced_configuration(sys, t, star)) {
      std::string s = std::string(t) + ":";
      for (const auto& v : *w) s += " " + to_text(v);
      rec.fail(s);
    }
  }
  return rec.r;
}

}  // namespace

PropertyReport run_property_suite(const SystemDescriptor& sys, Int kmax, std::uint64_t seed, const PropertyOptions& opts) {
  sys.validate();
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "run_property_suite: kmax must be nonnegative");
  const StarForm star = opts.star ? opts.star : StarForm(form_star);
  std::mt19937_64 rng(seed);

  std::vector<Vector> roots;
  for (auto& v : enumerate(sys, kmax))
    if (!v.is_zero()) roots.push_back(std::move(v));
  std::vector<Vector> real;
  for (const auto& v : roots)
    if (!v.is_imaginary()) real.push_back(v);

  PropertyReport rep{sys, kmax, seed, {}};
  rep.results.push_back(check_orthogonal_overlap(roots, star));
  rep.results.push_back(check_difference_sign(sys, real));
  rep.results.push_back(check_three_orthogonal_neighbours(real, star, rng, opts.samples));
  const auto samples = sample_params(sys, rng, std::max<std::size_t>(1, opts.samples / 20));
  rep.results.push_back(check_extra_long_census(sys, roots, samples));
  rep.results.push_back(check_no_imaginary_or_double(sys, roots, samples));
  rep.results.push_back(check_operators_preserve_R(sys, kmax));
  rep.results.push_back(check_no_exceptional_graph(sys, star));
  return rep;
}

}  // namespace tars
