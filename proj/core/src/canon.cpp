#include "tars/canon.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace tars {

namespace {

enum class Head { DeltaMinusTheta1, MinusTwoTheta1PlusDelta, DeltaMinusTheta12, MinusTwoTheta1 };
enum class Tail { Theta, SumLast, SumLastPlusDelta, TwoThetaPlusDelta };

Head head_of(Form f) {
  switch (f) {
    case Form::T2A4:
    case Form::T2D2: return Head::DeltaMinusTheta1;
    case Form::T2A2Long:
    case Form::B3: return Head::MinusTwoTheta1PlusDelta;
    case Form::T2A2NoLong:
    case Form::B1: return Head::DeltaMinusTheta12;
    case Form::B2:
    case Form::B4: return Head::MinusTwoTheta1;
  }
  return Head::DeltaMinusTheta1;
}

Tail tail_of(Form f) {
  switch (f) {
    case Form::B1:
    case Form::B3: return Tail::SumLast;
    case Form::B2: return Tail::SumLastPlusDelta;
    case Form::B4: return Tail::TwoThetaPlusDelta;
    default: return Tail::Theta;
  }
}

Vector head_value(Head h, const std::vector<Vector>& th, const Vector& d) {
  switch (h) {
    case Head::DeltaMinusTheta1: return d - th[0];
    case Head::MinusTwoTheta1PlusDelta: return d - 2 * th[0];
    case Head::DeltaMinusTheta12: return d - th[0] - th[1];
    case Head::MinusTwoTheta1: return -(2 * th[0]);
  }
  return d;
}

Vector tail_value(Tail t, const std::vector<Vector>& th, const Vector& d) {
  const std::size_t l = th.size();
  switch (t) {
    case Tail::Theta: return th[l - 1];
    case Tail::SumLast: return th[l - 2] + th[l - 1];
    case Tail::SumLastPlusDelta: return th[l - 2] + th[l - 1] + d;
    case Tail::TwoThetaPlusDelta: return 2 * th[l - 1] + d;
  }
  return d;
}

/// theta = zeta + k delta with zeta a signed symbol.
std::optional<std::pair<SignedSymbol, Int>> as_theta(const Vector& v) {
  std::optional<SignedSymbol> z;
  for (const Symbol& s : all_symbols(v.m(), v.n())) {
    const Int c = v.coord(s);
    if (c == 0) continue;
    if (z || std::llabs(c) != 1) return std::nullopt;
    z = SignedSymbol{c > 0 ? 1 : -1, s};
  }
  if (!z) return std::nullopt;
  return std::make_pair(*z, v.delta());
}

std::optional<Vector> halve(const Vector& v) {
  Vector h(v.m(), v.n());
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (v[i] % 2 != 0) return std::nullopt;
    h[i] = v[i] / 2;
  }
  return h;
}

Vector positive_unit(const SystemDescriptor& sys, const SignedSymbol& z) { return Vector::unit(sys.m, sys.n, z.symbol); }

Letter star(Vector v) { return Letter{std::move(v), FormTag::Star}; }

void expect_same(const Base& got, const Base& want, const char* what) {
  if (!got.same_set(want)) throw std::logic_error(std::string(what) + ": construction did not produce the tracked base");
}

/// Backtracking recovery of the theta chain for one row and sign.
class ChainMatcher {
 public:
  ChainMatcher(const SystemDescriptor& sys, Form form, int sign, std::vector<Vector> elems)
      : sys_(sys), form_(form), sign_(sign), elems_(std::move(elems)), d_(Vector::imaginary(sys.m, sys.n, 1)) {}

  void run(std::vector<CanonicalParams>& out) {
    const std::size_t l = static_cast<std::size_t>(sys_.ell());
    th_.assign(l, Vector{});
    used_.assign(elems_.size(), false);
    out_ = &out;
    const Tail tail = tail_of(form_);
    for (std::size_t ti = 0; ti < elems_.size(); ++ti) {
      used_[ti] = true;
      const Vector& t = elems_[ti];
      if (tail == Tail::Theta || tail == Tail::TwoThetaPlusDelta) {
        std::optional<Vector> last = tail == Tail::Theta ? std::optional<Vector>(t) : halve(t - d_);
        if (last && place(l - 1, *last)) {
          extend(static_cast<long>(l) - 2);
          unplace(l - 1);
        }
      } else if (l >= 2) {
        for (std::size_t ci = 0; ci < elems_.size(); ++ci) {
          if (used_[ci]) continue;
          const Vector& c = elems_[ci];
          auto last = halve(tail == Tail::SumLast ? t - c : t - d_ - c);
          if (!last || !place(l - 1, *last)) continue;
          used_[ci] = true;
          if (place(l - 2, c + *last)) {
            extend(static_cast<long>(l) - 3);
            unplace(l - 2);
          }
          used_[ci] = false;
          unplace(l - 1);
        }
      }
      used_[ti] = false;
    }
  }

 private:
  bool place(std::size_t i, const Vector& v) {
    auto t = as_theta(v);
    if (!t || symbols_.count(t->first.symbol)) return false;
    symbols_.insert(t->first.symbol);
    th_[i] = v;
    return true;
  }

  void unplace(std::size_t i) {
    symbols_.erase(as_theta(th_[i])->first.symbol);
    th_[i] = Vector{};
  }

  // Fill theta_j for j = i, i-1, ..., 0 from unused chain elements.
  void extend(long i) {
    if (i < 0) {
      finish();
      return;
    }
    const auto j = static_cast<std::size_t>(i);
    for (std::size_t e = 0; e < elems_.size(); ++e) {
      if (used_[e]) continue;
      if (!place(j, elems_[e] + th_[j + 1])) continue;
      used_[e] = true;
      extend(i - 1);
      used_[e] = false;
      unplace(j);
    }
  }

  void finish() {
    std::size_t rest = elems_.size();
    for (std::size_t e = 0; e < elems_.size(); ++e)
      if (!used_[e]) rest = e;
    if (rest == elems_.size()) return;
    if (head_value(head_of(form_), th_, d_) != elems_[rest]) return;
    CanonicalParams p;
    p.form = form_;
    p.sign = sign_;
    for (const auto& t : th_) {
      auto z = as_theta(t);
      p.zetas.push_back(z->first);
      p.ks.push_back(z->second);
    }
    try {
      validate_params(sys_, p);
    } catch (const Error&) {
      return;
    }
    out_->push_back(std::move(p));
  }

  SystemDescriptor sys_;
  Form form_;
  int sign_;
  std::vector<Vector> elems_;
  Vector d_;
  std::vector<Vector> th_;
  std::vector<bool> used_;
  std::set<Symbol> symbols_;
  std::vector<CanonicalParams>* out_ = nullptr;
};

CanonicalParams require_match(const Base& base, const char* who) {
  auto p = match_canonical(base);
  if (!p) throw Error(ErrorKind::InvalidArgument, std::string(who) + ": base does not match any canonical row");
  return *p;
}

void require_b_form(const CanonicalParams& p, const char* who) {
  if (!is_b_form(p.form))
    throw Error(ErrorKind::OutOfScope, std::string(who) + ": defined for rows B1-B4 of A(2m-1,2n-1)^(2) only");
}

}  // namespace

Base build_base(const SystemDescriptor& sys, const CanonicalParams& p) {
  validate_params(sys, p);
  const std::size_t l = static_cast<std::size_t>(sys.ell());
  const Vector d = Vector::imaginary(sys.m, sys.n, 1);
  std::vector<Vector> th;
  for (std::size_t i = 0; i < l; ++i) th.push_back(theta(sys, p, i));

  Base b{sys, {}};
  const Vector head = head_value(head_of(p.form), th, d);
  const bool head_last = p.form == Form::T2A4 || p.form == Form::T2D2;
  if (!head_last) b.elements.push_back(head);
  for (std::size_t i = 0; i + 1 < l; ++i) b.elements.push_back(th[i] - th[i + 1]);
  b.elements.push_back(tail_value(tail_of(p.form), th, d));
  if (head_last) b.elements.push_back(head);
  if (p.sign < 0)
    for (auto& e : b.elements) e = -e;
  return b;
}

std::vector<Vector> predicted_positive_roots(const SystemDescriptor& sys, const CanonicalParams& p, Int kmax) {
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be nonnegative");
  if (p.form == Form::T2A4 || p.form == Form::T2D2) return positive_roots(build_base(sys, p), kmax);
  validate_params(sys, p);

  const std::size_t l = static_cast<std::size_t>(sys.ell());
  const int m = sys.m, n = sys.n;
  std::vector<Vector> th;
  Int reach = 0;
  for (std::size_t i = 0; i < l; ++i) {
    th.push_back(theta(sys, p, i));
    reach = std::max<Int>(reach, std::llabs(p.ks[i]));
  }
  const Int top = kmax + 2 * reach + 2;
  auto is_eps = [&](std::size_t i) { return p.zetas[i].symbol.kind == SymbolKind::Eps; };

  std::set<Vector> out;
  auto add = [&](const Vector& v) {
    if (std::llabs(v.delta()) <= kmax && !v.is_zero()) out.insert(v);
  };
  // base + s delta for s in {first, first + step, ...} while it can still hit the window.
  auto add_shifts = [&](const Vector& base, Int first, Int step) {
    for (Int s = first; s <= top; s += step) add(base.shifted(s));
  };

  // Shared tail: {0, +-theta_i +- theta_j : i != j} + Z>0 delta and the extra-long strings.
  const Vector zero(m, n);
  add_shifts(zero, 1, 1);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      if (i == j) continue;
      for (int a : {1, -1})
        for (int b : {1, -1}) add_shifts(a * th[i] + b * th[j], 1, 1);
    }
    for (int a : {1, -1}) {
      if (is_eps(i))
        add_shifts(a * (2 * th[i]), 1, 2);
      else
        add_shifts(a * (2 * th[i]), 2, 2);
    }
  }

  const bool t2 = p.form == Form::T2A2Long || p.form == Form::T2A2NoLong;
  const bool flipped = p.form == Form::B2 || p.form == Form::B4;
  for (std::size_t i = 0; i < l; ++i) {
    if (t2) {
      for (int a : {1, -1}) add_shifts(a * th[i], 1, 1);
      add(th[i]);
    }
    for (std::size_t j = i + 1; j < l; ++j) {
      if (flipped) {
        add(th[i] - th[j]);
        add(-th[i] - th[j]);
      } else {
        add(th[i] + th[j]);
        add(th[i] - th[j]);
      }
    }
    if (!is_eps(i)) add(flipped ? -(2 * th[i]) : 2 * th[i]);
  }

  std::vector<Vector> result(out.begin(), out.end());
  if (p.sign < 0) {
    for (auto& v : result) v = -v;
    std::sort(result.begin(), result.end());
  }
  return result;
}

std::vector<CanonicalParams> all_parameterizations(const Base& base) {
  const SystemDescriptor& sys = base.sys;
  for (const auto& e : base.elements) require_compatible(sys, e);
  std::vector<CanonicalParams> found;
  if (base.elements.size() != static_cast<std::size_t>(sys.dim())) return found;
  for (Form f : valid_forms(sys)) {
    for (int sign : {1, -1}) {
      std::vector<Vector> elems = base.elements;
      if (sign < 0)
        for (auto& e : elems) e = -e;
      ChainMatcher(sys, f, sign, std::move(elems)).run(found);
    }
  }
  std::sort(found.begin(), found.end(), params_less);
  found.erase(std::unique(found.begin(), found.end()), found.end());
  // Duplicated input elements can fool the chain walk; confirm each candidate.
  std::erase_if(found, [&](const CanonicalParams& p) { return !build_base(sys, p).same_set(base); });
  return found;
}

std::optional<CanonicalParams> match_canonical(const Base& base) {
  auto all = all_parameterizations(base);
  if (all.empty()) return std::nullopt;
  return all.front();
}

bool is_fine(const CanonicalParams& p) {
  return std::all_of(p.zetas.begin(), p.zetas.end(), [](const SignedSymbol& z) { return z.sign == 1; });
}

std::size_t admissible_prefix(const CanonicalParams& p) {
  std::size_t t = 0;
  while (t < p.ks.size() && p.ks[t] == 0) ++t;
  return t;
}

Normalization make_fine(const SystemDescriptor& sys, const CanonicalParams& p) {
  validate_params(sys, p);
  require_b_form(p, "make_fine");
  const Vector d = Vector::imaginary(sys.m, sys.n, 1);
  Normalization r{{}, {}, p};
  for (std::size_t t = 0; t < p.zetas.size(); ++t) {
    if (p.zetas[t].sign > 0) continue;
    const Vector u = positive_unit(sys, p.zetas[t]);
    if (p.zetas[t].symbol.kind == SymbolKind::Del) {
      r.word.letters.push_back(star(2 * u));
    } else {
      r.word.letters.push_back(star(2 * u + d));
      r.params.ks[t] = checked_add(r.params.ks[t], 1);
    }
    r.params.zetas[t].sign = 1;
  }
  const Base in = build_base(sys, p);
  r.base = build_base(sys, r.params);
  expect_same(Base{sys, apply_word(r.word, in.elements)}, r.base, "make_fine");
  return r;
}

Normalization make_fine(const Base& base) { return make_fine(base.sys, require_match(base, "make_fine")); }

Normalization make_admissible(const SystemDescriptor& sys, const CanonicalParams& p) {
  validate_params(sys, p);
  require_b_form(p, "make_admissible");
  if (!is_fine(p)) throw Error(ErrorKind::InvalidArgument, "make_admissible: input base is not fine");
  const Vector d = Vector::imaginary(sys.m, sys.n, 1);
  const std::size_t l = p.zetas.size();
  Normalization r{{}, {}, p};
  auto& ks = r.params.ks;
  std::vector<Vector> u;
  for (const auto& z : p.zetas) u.push_back(positive_unit(sys, z));

  // Moves k_t onto k_{t+1}: u_t -> u_t - k_t delta, u_{t+1} -> u_{t+1} + k_t delta.
  for (std::size_t t = 0; t + 1 < l; ++t) {
    if (ks[t] == 0) continue;
    const Vector beta = u[t] - u[t + 1];
    ReflectionWord step{{star(beta), star(beta + ks[t] * d)}};
    r.word = step.then_after(r.word);
    ks[t + 1] = checked_add(ks[t + 1], ks[t]);
    ks[t] = 0;
  }

  const Int k = ks[l - 1];
  if (p.form != Form::B1 && k != 0) {
    const Vector& v = u[l - 1];
    const bool odd = floor_mod(k, 2) == 1;
    ReflectionWord last;
    switch (p.form) {
      case Form::B2:
        last = odd ? ReflectionWord{{star(2 * v + (k + 1) * d)}} : ReflectionWord{{star(2 * v), star(2 * v + k * d)}};
        break;
      case Form::B3:
        last = odd ? ReflectionWord{{star(2 * v + k * d)}}
                   : ReflectionWord{{star(2 * v + d), star(2 * v + (k + 1) * d)}};
        break;
      case Form::B4:
        if (odd) {
          const Vector& v1 = u[0];
          last = ReflectionWord{{star(2 * v1), star(v1 - v), star(v1 + v), star(2 * v + k * d)}};
        } else {
          last = ReflectionWord{{star(2 * v + d), star(2 * v + (k + 1) * d)}};
        }
        break;
      default:
        break;
    }
    r.word = last.then_after(r.word);
    ks[l - 1] = 0;
  }

  const Base in = build_base(sys, p);
  r.base = build_base(sys, r.params);
  expect_same(Base{sys, apply_word(r.word, in.elements)}, r.base, "make_admissible");
  return r;
}

Normalization make_admissible(const Base& base) {
  for (const auto& p : all_parameterizations(base))
    if (is_fine(p)) return make_admissible(base.sys, p);
  if (auto p = match_canonical(base)) {
    require_b_form(*p, "make_admissible");
    throw Error(ErrorKind::InvalidArgument, "make_admissible: input base is not fine");
  }
  throw Error(ErrorKind::InvalidArgument, "make_admissible: base does not match any canonical row");
}

Normalization normalize(const Base& base) {
  Normalization f = make_fine(base);
  Normalization a = make_admissible(base.sys, f.params);
  a.word = a.word.then_after(f.word);
  return a;
}

bool are_conjugate(const Base& b, const Base& b_prime) {
  const BaseCheck c1 = is_base(b);
  const BaseCheck c2 = is_base(b_prime);
  if (c1.verdict != Verdict::Certified || c2.verdict != Verdict::Certified)
    throw Error(ErrorKind::Unverified, "are_conjugate: both inputs must certify");
  return b.sys == b_prime.sys && c1.params->form == c2.params->form;
}

namespace {

ReflectionWord align_symbols(const SystemDescriptor& sys, const CanonicalParams& target, const CanonicalParams& source) {
  const std::size_t l = target.zetas.size();
  std::vector<Symbol> cur;
  for (const auto& z : source.zetas) cur.push_back(z.symbol);
  std::vector<std::size_t> order{0};
  if (l > 1) order.push_back(l - 1);
  for (std::size_t i = 1; i + 1 < l; ++i) order.push_back(i);

  ReflectionWord w;
  for (std::size_t i : order) {
    const Symbol want = target.zetas[i].symbol;
    const Symbol have = cur[i];
    if (want == have) continue;
    w = ReflectionWord{{star(Vector::unit(sys.m, sys.n, want) - Vector::unit(sys.m, sys.n, have))}}.then_after(w);
    for (auto& s : cur) {
      if (s == want)
        s = have;
      else if (s == have)
        s = want;
    }
  }
  return w;
}

// Simple-reflection descent. Both bases are bases of S (or of T for the row
// with an extra-long root), whose Weyl group lies in the quasi-Weyl group.
ReflectionWord descend(const Base& b, const Base& b_prime) {
  const Decomposer dec(b.elements);
  std::vector<Vector> cur = b_prime.sorted();
  ReflectionWord w;
  for (int guard = 0; guard < 100000; ++guard) {
    const Vector* neg = nullptr;
    for (const auto& g : cur) {
      if (dec(g).sign == DecompSign::Negative) {
        neg = &g;
        break;
      }
    }
    if (!neg) {
      if (Base{b.sys, cur}.same_set(b)) return w;
      throw std::logic_error("conjugacy_word: descent stopped away from the target base");
    }
    const Vector g = *neg;
    for (auto& x : cur) x = reflect(g, FormTag::Star, x);
    std::sort(cur.begin(), cur.end());
    w = ReflectionWord{{star(g)}}.then_after(w);
  }
  throw std::logic_error("conjugacy_word: descent did not terminate");
}

}  // namespace

ReflectionWord conjugacy_word(const Base& b, const Base& b_prime) {
  if (!(b.sys == b_prime.sys)) throw Error(ErrorKind::NotConjugate, "conjugacy_word: bases belong to different systems");
  const CanonicalParams p = require_match(b, "conjugacy_word");
  const CanonicalParams q = require_match(b_prime, "conjugacy_word");
  if (p.form != q.form) throw Error(ErrorKind::NotConjugate, "conjugacy_word: bases lie in different rows");
  if (p.sign != q.sign)
    throw Error(ErrorKind::NotConjugate, "conjugacy_word: opposite global signs; the quasi-Weyl group fixes delta");
  if (b.same_set(b_prime)) return {};

  const SystemDescriptor& sys = b.sys;
  ReflectionWord w;
  if (p.form == Form::B2 || p.form == Form::B3 || p.form == Form::B4) {
    const Normalization nb = normalize(b);
    const Normalization nbp = normalize(b_prime);
    const ReflectionWord c = align_symbols(sys, nb.params, nbp.params);
    w = nb.word.inverse().then_after(c).then_after(nbp.word);
  } else {
    w = descend(b, b_prime);
  }
  expect_same(Base{sys, apply_word(w, b_prime.elements)}, b, "conjugacy_word");
  return w;
}

}  // namespace tars
