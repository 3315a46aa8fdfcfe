#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "../support/systems.hpp"
#include "tars/core.hpp"
#include "tars/rational.hpp"

using namespace tars;
using tars::testing::V;

TEST_CASE("checked arithmetic throws on overflow") {
  const Int big = std::numeric_limits<Int>::max();
  CHECK(checked_add(2, 3) == 5);
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_sub(-big - 1, 1), Error);
  CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), Error);
  try {
    checked_mul(big, big);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Overflow);
  }
  CHECK(floor_mod(-3, 4) == 1);
  CHECK(floor_mod(6, 4) == 2);
}

TEST_CASE("rational arithmetic is exact and reduced") {
  const Rational a(2, 4), b(-1, 3);
  CHECK(a.num() == 1);
  CHECK(a.den() == 2);
  CHECK(a + b == Rational(1, 6));
  CHECK(a * b == Rational(-1, 6));
  CHECK(a / b == Rational(-3, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(4, 2).is_integer());
  CHECK(b < a);
  CHECK(Rational(-7, 3).str() == "-7/3");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational inverse and rank") {
  RationalMatrix m{{2, 1}, {1, 1}};
  auto inv = invert(m);
  REQUIRE(inv);
  CHECK((*inv)[0][0] == Rational(1));
  CHECK((*inv)[0][1] == Rational(-1));
  CHECK((*inv)[1][1] == Rational(2));
  CHECK_FALSE(invert(RationalMatrix{{1, 2}, {2, 4}}));
  CHECK(rank(RationalMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank(RationalMatrix{{1, 0}, {0, 1}, {1, 1}}) == 2);
}

TEST_CASE("system descriptors reject excluded rows") {
  CHECK_NOTHROW(SystemDescriptor::make(Family::AEvenOdd2, 0, 1));
  CHECK_THROWS_AS(SystemDescriptor::make(Family::AEvenOdd2, 1, 0), Error);
  CHECK_THROWS_AS(SystemDescriptor::make(Family::AOddOdd2, 1, 1), Error);
  CHECK_NOTHROW(SystemDescriptor::make(Family::AOddOdd2, 2, 1));
  CHECK_THROWS_AS(SystemDescriptor::make(Family::AEvenEven4, 0, 0), Error);
  CHECK_NOTHROW(SystemDescriptor::make(Family::AEvenEven4, 1, 0));
  CHECK_THROWS_AS(SystemDescriptor::make(Family::D2, -1, 1), Error);
  for (Family f : tars::testing::kFamilies) CHECK(family_from_slug(family_slug(f)) == f);
  CHECK_THROWS_AS(family_from_slug("b-2"), Error);
  CHECK(family_period(Family::AEvenEven4) == 4);
  CHECK(family_period(Family::D2) == 2);
}

TEST_CASE("invariant form") {
  const auto sys = SystemDescriptor::make(Family::AEvenOdd2, 1, 1);
  CHECK(form_kappa(V(sys, "d1"), V(sys, "d1")) == -1);
  CHECK(form_kappa(V(sys, "D"), V(sys, "D")) == 0);
  CHECK(form_kappa(V(sys, "e1+D"), V(sys, "e1-D")) == 1);
  CHECK(form_kappa(V(sys, "e1"), V(sys, "d1")) == 0);
}

TEST_CASE("star form") {
  const auto sys = SystemDescriptor::make(Family::AEvenOdd2, 1, 1);
  CHECK(form_star(V(sys, "d1"), V(sys, "d1")) == 1);
  CHECK(form_star(V(sys, "e1"), V(sys, "d1")) == 0);
  CHECK(form_star(V(sys, "2d1+3D"), V(sys, "2d1-5D")) == 4);
}

TEST_CASE("forms are symmetric and mismatched dimensions throw") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<Int> d(-5, 5);
  for (int i = 0; i < 200; ++i) {
    Vector u(2, 2), v(2, 2);
    for (std::size_t j = 0; j < 5; ++j) {
      u[j] = d(rng);
      v[j] = d(rng);
    }
    CHECK(form_kappa(u, v) == form_kappa(v, u));
    CHECK(form_star(u, v) == form_star(v, u));
    CHECK(form_star(u, u) >= 0);
  }
  try {
    form_kappa(Vector(1, 1), Vector(2, 1));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  (void)sys;
}

TEST_CASE("support and sgn") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 1, 2);
  const auto s = support(V(sys, "e1-d2+3D"));
  REQUIRE(s.size() == 2);
  CHECK(s[0] == Symbol{SymbolKind::Eps, 1});
  CHECK(s[1] == Symbol{SymbolKind::Del, 2});
  CHECK(support(V(sys, "7D")).empty());
  CHECK(support(V(sys, "2d1")) == std::vector<Symbol>{{SymbolKind::Del, 1}});
  CHECK(sgn({SymbolKind::Eps, 1}, V(sys, "e1-d2")) == 1);
  CHECK(sgn({SymbolKind::Del, 2}, V(sys, "e1-d2")) == -1);
  CHECK_THROWS_AS(sgn({SymbolKind::Del, 1}, V(sys, "3D")), Error);
}

TEST_CASE("vector ordering is by delta level first") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 1, 2);
  CHECK(V(sys, "e1-D") < V(sys, "-e1"));
  CHECK(V(sys, "-e1") < V(sys, "e1"));
  CHECK(V(sys, "e1").shifted(2) == V(sys, "e1+2D"));
  CHECK(Vector::of(1, 2, {-1, {SymbolKind::Del, 2}}, 3) == V(sys, "-d2+3D"));
  CHECK(Vector::imaginary(1, 2, -4) == V(sys, "-4D"));
  CHECK(V(sys, "0").is_zero());
  CHECK(V(sys, "3D").is_imaginary());
  CHECK_FALSE(V(sys, "d1+3D").is_imaginary());
  CHECK(std::hash<Vector>{}(V(sys, "e1")) == std::hash<Vector>{}(V(sys, "e1")));
}
