#include "tars/bases.hpp"

#include <algorithm>
#include <cstdlib>

#include "tars/canon.hpp"

namespace tars {

std::vector<Vector> Base::sorted() const {
  std::vector<Vector> s = elements;
  std::sort(s.begin(), s.end());
  return s;
}

Base Base::negated() const {
  Base b{sys, {}};
  for (const auto& e : elements) b.elements.push_back(-e);
  return b;
}

std::string_view to_string(DecompSign s) {
  switch (s) {
    case DecompSign::Positive: return "+";
    case DecompSign::Negative: return "-";
    case DecompSign::Zero: return "zero";
    case DecompSign::Mixed: return "mixed";
  }
  return "";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Certified: return "certified";
    case Verdict::VerifiedAtCutoff: return "verified-at-cutoff";
    case Verdict::Rejected: return "rejected";
  }
  return "";
}

std::string_view to_string(RejectReason r) {
  switch (r) {
    case RejectReason::None: return "none";
    case RejectReason::WrongSize: return "wrong-size";
    case RejectReason::NotARoot: return "not-a-root";
    case RejectReason::Dependent: return "dependent";
    case RejectReason::Imaginary: return "imaginary-element";
    case RejectReason::TwiceRoot: return "element-in-2R";
    case RejectReason::NonIntegral: return "non-integral";
    case RejectReason::MixedSign: return "mixed-sign";
  }
  return "";
}

Decomposer::Decomposer(const std::vector<Vector>& basis) {
  if (basis.empty()) throw Error(ErrorKind::Dependent, "empty basis");
  m_ = basis.front().m();
  n_ = basis.front().n();
  d_ = static_cast<std::size_t>(basis.front().dim());
  for (const auto& b : basis) require_compatible(basis.front(), b);
  if (basis.size() != d_) throw Error(ErrorKind::Dependent, "basis size differs from the dimension");

  RationalMatrix a(d_, std::vector<Rational>(d_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) a[i][j] = basis[j][i];
  auto inv = invert(a);
  if (!inv) throw Error(ErrorKind::Dependent, "vectors are linearly dependent");

  Int den = 1;
  for (const auto& row : *inv)
    for (const auto& x : row) den = checked_mul(den / std::gcd(den, x.den()), x.den());
  den_ = den;
  num_.resize(d_ * d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) {
      const Rational& x = (*inv)[i][j];
      num_[i * d_ + j] = checked_mul(x.num(), den / x.den());
    }
}

Decomposition Decomposer::operator()(const Vector& v) const {
  if (v.m() != m_ || v.n() != n_) throw Error(ErrorKind::DimensionMismatch, "decompose: vector dimension mismatch");
  Decomposition d;
  d.coeffs.reserve(d_);
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < d_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < d_; ++j) s = checked_add(s, checked_mul(num_[i * d_ + j], v[j]));
    if (s % den_ != 0) d.integral = false;
    pos |= s > 0;
    neg |= s < 0;
    d.coeffs.emplace_back(s, den_);
  }
  d.sign = pos && neg ? DecompSign::Mixed : pos ? DecompSign::Positive : neg ? DecompSign::Negative : DecompSign::Zero;
  return d;
}

bool Decomposer::admissible(const Vector& v) const {
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < d_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < d_; ++j) s = checked_add(s, checked_mul(num_[i * d_ + j], v[j]));
    if (s % den_ != 0) return false;
    pos |= s > 0;
    neg |= s < 0;
    if (pos && neg) return false;
  }
  return true;
}

Decomposition decompose(const Base& base, const Vector& v) {
  require_compatible(base.sys, v);
  return Decomposer(base.elements)(v);
}

Int default_kmax(const Base& base) {
  Int mx = 0;
  for (const auto& e : base.elements) mx = std::max<Int>(mx, std::llabs(e.delta()));
  return std::max<Int>(4, 2 * (mx + family_period(base.sys.family)));
}

namespace {

BaseCheck reject(RejectReason r, Int kmax, std::optional<Vector> witness = std::nullopt,
                 std::optional<Decomposition> dec = std::nullopt) {
  BaseCheck c;
  c.verdict = Verdict::Rejected;
  c.reason = r;
  c.kmax = kmax;
  c.witness = std::move(witness);
  c.witness_decomposition = std::move(dec);
  return c;
}

}  // namespace

BaseCheck is_base(const Base& base, std::optional<Int> kmax_opt, Subsystem sub) {
  const SystemDescriptor& sys = base.sys;
  for (const auto& e : base.elements) require_compatible(sys, e);
  const Int kmax = kmax_opt ? *kmax_opt : default_kmax(base);
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "kmax must be nonnegative");

  if (base.elements.size() != static_cast<std::size_t>(sys.dim())) return reject(RejectReason::WrongSize, kmax);
  for (const auto& e : base.elements)
    if (!is_root(sys, e, sub)) return reject(RejectReason::NotARoot, kmax, e);

  std::optional<Decomposer> dec;
  try {
    dec.emplace(base.elements);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Dependent) throw;
    return reject(RejectReason::Dependent, kmax);
  }

  // An element k delta makes alpha - 4k delta decompose with coefficients 1
  // and -4; an element 2 beta makes beta decompose with coefficient 1/2.
  for (const auto& e : base.elements) {
    if (!e.is_imaginary()) continue;
    for (const auto& a : base.elements) {
      if (a.is_imaginary()) continue;
      Vector w = a.shifted(checked_mul(-4, e.delta()));
      return reject(RejectReason::Imaginary, kmax, w, (*dec)(w));
    }
  }
  for (const auto& e : base.elements) {
    if (!in_twice_roots(sys, e, sub)) continue;
    Vector half(sys.m, sys.n);
    for (std::size_t i = 0; i < e.coords().size(); ++i) half[i] = e[i] / 2;
    return reject(RejectReason::TwiceRoot, kmax, half, (*dec)(half));
  }

  for (const auto& v : enumerate(sys, kmax, sub)) {
    if (dec->admissible(v)) continue;
    Decomposition d = (*dec)(v);
    return reject(d.integral ? RejectReason::MixedSign : RejectReason::NonIntegral, kmax, v, d);
  }

  BaseCheck ok;
  ok.verdict = Verdict::VerifiedAtCutoff;
  ok.kmax = kmax;
  if (sub == Subsystem::Full) {
    if (auto p = match_canonical(base)) {
      ok.verdict = Verdict::Certified;
      ok.params = std::move(p);
    }
  }
  return ok;
}

std::vector<Vector> positive_roots(const Base& base, Int kmax, Subsystem sub) {
  const SystemDescriptor& sys = base.sys;
  for (const auto& e : base.elements) {
    require_compatible(sys, e);
    if (!is_root(sys, e, sub)) throw Error(ErrorKind::Unverified, "positive_roots: base element is not a root");
  }
  Decomposer dec = [&] {
    try {
      return Decomposer(base.elements);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Dependent) throw Error(ErrorKind::Unverified, "positive_roots: base is dependent");
      throw;
    }
  }();
  std::vector<Vector> out;
  for (const auto& v : enumerate(sys, kmax, sub)) {
    if (v.is_zero()) continue;
    Decomposition d = dec(v);
    if (!d.admissible()) throw Error(ErrorKind::Unverified, "positive_roots: base fails on the window");
    if (d.sign == DecompSign::Positive) out.push_back(v);
  }
  return out;
}

}  // namespace tars
