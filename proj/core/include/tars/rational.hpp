#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "tars/arith.hpp"

namespace tars {

/// Exact rational number over checked 64-bit integers, always reduced with a
/// positive denominator.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Int num) : num_(num), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const { return Rational(checked_sub(0, num_), den_); }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  std::string str() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Square matrix of rationals in row-major order.
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<RationalMatrix> invert(const RationalMatrix& a);

/// Rank of an arbitrary (possibly non-square) rational matrix.
std::size_t rank(RationalMatrix a);

}  // namespace tars
