#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "tars/arith.hpp"

namespace tars {

enum class Family {
  AEvenOdd2,   // A(2m,2n-1)^(2)
  AOddOdd2,    // A(2m-1,2n-1)^(2)
  AEvenEven4,  // A(2m,2n)^(4)
  D2,          // D(m+1,n)^(2)
};

/// CLI slug: a-2m-2n1-2, a-2m1-2n1-2, a-2m-2n-4, d-2.
std::string_view family_slug(Family f);
Family family_from_slug(std::string_view slug);
/// Human-readable name, e.g. "A(2m,2n-1)^(2)".
std::string_view family_name(Family f);
/// Period of the delta-shift pattern: 4 for A(2m,2n)^(4), 2 otherwise.
int family_period(Family f);

struct SystemDescriptor {
  Family family = Family::AEvenOdd2;
  int m = 0;
  int n = 0;

  /// Throws InvalidArgument if (family, m, n) is not an admissible row.
  static SystemDescriptor make(Family family, int m, int n);
  void validate() const;

  int ell() const { return m + n; }
  int dim() const { return m + n + 1; }

  friend bool operator==(const SystemDescriptor&, const SystemDescriptor&) = default;
};

enum class SymbolKind { Eps, Del };

/// A basis symbol eps_i or delta_p (1-based). The imaginary delta is not a symbol.
struct Symbol {
  SymbolKind kind = SymbolKind::Eps;
  int index = 1;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

struct SignedSymbol {
  int sign = 1;
  Symbol symbol;

  friend auto operator<=>(const SignedSymbol&, const SignedSymbol&) = default;
};

/// All symbols of a system in basis order.
std::vector<Symbol> all_symbols(int m, int n);

/// Integer vector over the ordered basis (eps_1..eps_m, delta_1..delta_n, delta).
class Vector {
 public:
  Vector() = default;
  Vector(int m, int n) : m_(m), n_(n), c_(static_cast<std::size_t>(m + n + 1), 0) {}
  Vector(int m, int n, std::vector<Int> coords);

  static Vector zero(int m, int n) { return Vector(m, n); }
  static Vector unit(int m, int n, Symbol s, Int coeff = 1);
  static Vector imaginary(int m, int n, Int k);
  static Vector of(int m, int n, SignedSymbol z, Int k = 0);

  int m() const { return m_; }
  int n() const { return n_; }
  int dim() const { return m_ + n_ + 1; }

  Int eps(int i) const { return c_[static_cast<std::size_t>(i - 1)]; }
  Int del(int p) const { return c_[static_cast<std::size_t>(m_ + p - 1)]; }
  Int delta() const { return c_.back(); }
  Int coord(Symbol s) const { return s.kind == SymbolKind::Eps ? eps(s.index) : del(s.index); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }

  void set(Symbol s, Int value);
  void set_delta(Int value) { c_.back() = value; }

  bool is_zero() const;
  /// True iff the vector is a multiple of delta (including 0).
  bool is_imaginary() const;

  Vector operator-() const;
  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Int s, Vector v);
  Vector shifted(Int k) const;

  bool compatible(const Vector& o) const { return m_ == o.m_ && n_ == o.n_; }
  bool compatible(const SystemDescriptor& sys) const { return m_ == sys.m && n_ == sys.n; }

  friend bool operator==(const Vector& a, const Vector& b) { return a.m_ == b.m_ && a.n_ == b.n_ && a.c_ == b.c_; }
  /// Canonical order: by delta coefficient, then coordinates lexicographically.
  friend std::strong_ordering operator<=>(const Vector& a, const Vector& b);

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<Int> c_;
};

struct VectorHash {
  std::size_t operator()(const Vector& v) const noexcept;
};

void require_compatible(const Vector& u, const Vector& v);
void require_compatible(const SystemDescriptor& sys, const Vector& v);

Int form_kappa(const Vector& u, const Vector& v);
Int form_star(const Vector& u, const Vector& v);

/// Symbols with nonzero coordinate, in basis order; delta is never included.
std::vector<Symbol> support(const Vector& v);
/// Sign of the coordinate of s in v; throws if s is outside the support.
int sgn(Symbol s, const Vector& v);

}  // namespace tars

template <>
struct std::hash<tars::Vector> {
  std::size_t operator()(const tars::Vector& v) const noexcept { return tars::VectorHash{}(v); }
};
