#include "tars/core.hpp"

#include <algorithm>
#include <string>

namespace tars {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NotARoot: return "not-a-root";
    case ErrorKind::IsotropicReflection: return "isotropic-reflection";
    case ErrorKind::NonIntegral: return "non-integral";
    case ErrorKind::Dependent: return "dependent";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Unverified: return "unverified";
    case ErrorKind::NotConjugate: return "not-conjugate";
    case ErrorKind::OutOfScope: return "out-of-scope";
    case ErrorKind::BudgetExceeded: return "budget-exceeded";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

std::string_view family_slug(Family f) {
  switch (f) {
    case Family::AEvenOdd2: return "a-2m-2n1-2";
    case Family::AOddOdd2: return "a-2m1-2n1-2";
    case Family::AEvenEven4: return "a-2m-2n-4";
    case Family::D2: return "d-2";
  }
  return "";
}

Family family_from_slug(std::string_view slug) {
  for (Family f : {Family::AEvenOdd2, Family::AOddOdd2, Family::AEvenEven4, Family::D2})
    if (family_slug(f) == slug) return f;
  throw Error(ErrorKind::InvalidArgument, "unknown family '" + std::string(slug) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::AEvenOdd2: return "A(2m,2n-1)^(2)";
    case Family::AOddOdd2: return "A(2m-1,2n-1)^(2)";
    case Family::AEvenEven4: return "A(2m,2n)^(4)";
    case Family::D2: return "D(m+1,n)^(2)";
  }
  return "";
}

int family_period(Family f) { return f == Family::AEvenEven4 ? 4 : 2; }

SystemDescriptor SystemDescriptor::make(Family family, int m, int n) {
  SystemDescriptor s{family, m, n};
  s.validate();
  return s;
}

void SystemDescriptor::validate() const {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidArgument,
                std::string(family_name(family)) + " with m=" + std::to_string(m) + ", n=" + std::to_string(n) + ": " + why);
  };
  if (m < 0 || n < 0) fail("m and n must be nonnegative");
  switch (family) {
    case Family::AEvenOdd2:
    case Family::D2:
      if (n < 1) fail("requires n >= 1");
      break;
    case Family::AOddOdd2:
      if (m < 1 || n < 1) fail("requires m >= 1 and n >= 1");
      if (m == 1 && n == 1) fail("(m,n) = (1,1) is excluded");
      break;
    case Family::AEvenEven4:
      if (m == 0 && n == 0) fail("(m,n) = (0,0) is excluded");
      break;
  }
}

std::vector<Symbol> all_symbols(int m, int n) {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(m + n));
  for (int i = 1; i <= m; ++i) out.push_back({SymbolKind::Eps, i});
  for (int p = 1; p <= n; ++p) out.push_back({SymbolKind::Del, p});
  return out;
}

Vector::Vector(int m, int n, std::vector<Int> coords) : m_(m), n_(n), c_(std::move(coords)) {
  if (m < 0 || n < 0 || c_.size() != static_cast<std::size_t>(m + n + 1))
    throw Error(ErrorKind::DimensionMismatch, "coordinate count does not match m+n+1");
}

namespace {

std::size_t slot(int m, int n, Symbol s) {
  if (s.index < 1 || (s.kind == SymbolKind::Eps && s.index > m) || (s.kind == SymbolKind::Del && s.index > n))
    throw Error(ErrorKind::DimensionMismatch, "symbol index out of range");
  return static_cast<std::size_t>(s.kind == SymbolKind::Eps ? s.index - 1 : m + s.index - 1);
}

}  // namespace

Vector Vector::unit(int m, int n, Symbol s, Int coeff) {
  Vector v(m, n);
  v.c_[slot(m, n, s)] = coeff;
  return v;
}

Vector Vector::imaginary(int m, int n, Int k) {
  Vector v(m, n);
  v.c_.back() = k;
  return v;
}

Vector Vector::of(int m, int n, SignedSymbol z, Int k) {
  Vector v = unit(m, n, z.symbol, z.sign);
  v.c_.back() = k;
  return v;
}

void Vector::set(Symbol s, Int value) { c_[slot(m_, n_, s)] = value; }

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Int x) { return x == 0; });
}

bool Vector::is_imaginary() const {
  return std::all_of(c_.begin(), c_.end() - 1, [](Int x) { return x == 0; });
}

Vector Vector::operator-() const {
  Vector r(*this);
  for (auto& x : r.c_) x = checked_sub(0, x);
  return r;
}

Vector& Vector::operator+=(const Vector& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_compatible(*this, o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
  return *this;
}

Vector operator*(Int s, Vector v) {
  for (auto& x : v.c_) x = checked_mul(s, x);
  return v;
}

Vector Vector::shifted(Int k) const {
  Vector r(*this);
  r.c_.back() = checked_add(r.c_.back(), k);
  return r;
}

std::strong_ordering operator<=>(const Vector& a, const Vector& b) {
  if (auto c = a.m_ <=> b.m_; c != 0) return c;
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.delta() <=> b.delta(); c != 0) return c;
  for (std::size_t i = 0; i + 1 < a.c_.size(); ++i)
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

std::size_t VectorHash::operator()(const Vector& v) const noexcept {
  std::size_t h = static_cast<std::size_t>(v.m()) * 31 + static_cast<std::size_t>(v.n());
  for (Int x : v.coords()) h = h * 1000003u ^ std::hash<Int>{}(x);
  return h;
}

void require_compatible(const Vector& u, const Vector& v) {
  if (!u.compatible(v))
    throw Error(ErrorKind::DimensionMismatch, "vectors have different (m,n): (" + std::to_string(u.m()) + "," +
                                                  std::to_string(u.n()) + ") vs (" + std::to_string(v.m()) + "," +
                                                  std::to_string(v.n()) + ")");
}

void require_compatible(const SystemDescriptor& sys, const Vector& v) {
  if (!v.compatible(sys))
    throw Error(ErrorKind::DimensionMismatch, "vector dimension does not match the system (m=" +
                                                  std::to_string(sys.m) + ", n=" + std::to_string(sys.n) + ")");
}

Int form_kappa(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  Int s = 0;
  for (int i = 1; i <= u.m(); ++i) s = checked_add(s, checked_mul(u.eps(i), v.eps(i)));
  for (int p = 1; p <= u.n(); ++p) s = checked_sub(s, checked_mul(u.del(p), v.del(p)));
  return s;
}

Int form_star(const Vector& u, const Vector& v) {
  require_compatible(u, v);
  Int s = 0;
  for (int i = 1; i <= u.m(); ++i) s = checked_add(s, checked_mul(u.eps(i), v.eps(i)));
  for (int p = 1; p <= u.n(); ++p) s = checked_add(s, checked_mul(u.del(p), v.del(p)));
  return s;
}

std::vector<Symbol> support(const Vector& v) {
  std::vector<Symbol> out;
  for (const Symbol& s : all_symbols(v.m(), v.n()))
    if (v.coord(s) != 0) out.push_back(s);
  return out;
}

int sgn(Symbol s, const Vector& v) {
  Int c = v.coord(s);
  if (c == 0) throw Error(ErrorKind::InvalidArgument, "sgn: symbol is not in the support");
  return c > 0 ? 1 : -1;
}

}  // namespace tars
