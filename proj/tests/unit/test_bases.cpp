#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "../support/systems.hpp"
#include "tars/bases.hpp"
#include "tars/canon.hpp"

using namespace tars;
using tars::testing::V;
using tars::testing::Vs;

namespace {

const SystemDescriptor kA11 = SystemDescriptor::make(Family::AEvenOdd2, 1, 1);

Base nolong_base() { return Base{kA11, Vs(kA11, {"D-d1-e1", "d1-e1", "e1"})}; }

std::vector<Rational> ints(std::initializer_list<Int> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST_CASE("decomposition over a base") {
  const Base b = nolong_base();
  const auto d = decompose(b, V(kA11, "D"));
  CHECK(d.coeffs == ints({1, 1, 2}));
  CHECK(d.integral);
  CHECK(d.sign == DecompSign::Positive);
  CHECK(decompose(b, V(kA11, "2d1+D")).coeffs == ints({1, 3, 4}));
  CHECK(decompose(b, V(kA11, "-e1")).sign == DecompSign::Negative);
  CHECK(decompose(b, V(kA11, "0")).sign == DecompSign::Zero);
  for (std::size_t i = 0; i < b.elements.size(); ++i) {
    std::vector<Rational> unit(3, Rational(0));
    unit[i] = 1;
    CHECK(decompose(b, b.elements[i]).coeffs == unit);
  }
}

TEST_CASE("decompositions recompose exactly") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 1);
  CanonicalParams p{Form::B4, {{1, {SymbolKind::Del, 1}}, {-1, {SymbolKind::Eps, 2}}, {1, {SymbolKind::Eps, 1}}}, {1, -2, 0}, 1};
  const Base b = build_base(sys, p);
  for (const auto& v : enumerate(sys, 3)) {
    const auto d = decompose(b, v);
    REQUIRE(d.integral);
    Vector sum(sys.m, sys.n);
    for (std::size_t i = 0; i < b.elements.size(); ++i) sum += d.coeffs[i].num() * b.elements[i];
    CHECK(sum == v);
  }
}

TEST_CASE("mixed and fractional decompositions") {
  const Base b{kA11, Vs(kA11, {"e1", "d1", "D"})};
  const auto d = decompose(b, V(kA11, "e1-d1"));
  CHECK(d.sign == DecompSign::Mixed);
  CHECK_FALSE(d.admissible());
  const Base half{kA11, Vs(kA11, {"2e1+D", "d1", "D"})};
  CHECK_FALSE(decompose(half, V(kA11, "e1")).integral);
  CHECK_THROWS_AS(decompose(Base{kA11, Vs(kA11, {"e1", "2e1", "D"})}, V(kA11, "e1")), Error);
}

TEST_CASE("canonical base of the order-4 family certifies") {
  const auto sys = SystemDescriptor::make(Family::AEvenEven4, 1, 1);
  CanonicalParams p{Form::T2A4, {{1, {SymbolKind::Eps, 1}}, {1, {SymbolKind::Del, 1}}}, {0, 0}, 1};
  const auto c = is_base(build_base(sys, p));
  CHECK(c.verdict == Verdict::Certified);
  REQUIRE(c.params);
  CHECK(c.params->form == Form::T2A4);
}

TEST_CASE("rejections carry a reason and witness") {
  auto reason = [](const Base& b) { return is_base(b).reason; };
  CHECK(reason(Base{kA11, Vs(kA11, {"d1-e1", "e1"})}) == RejectReason::WrongSize);
  CHECK(reason(Base{kA11, Vs(kA11, {"3D", "d1-e1", "e1"})}) == RejectReason::Imaginary);
  CHECK(reason(Base{kA11, Vs(kA11, {"D-d1-e1", "2e1", "e1"})}) == RejectReason::NotARoot);
  // Replacing the last element by the sum of the others breaks independence.
  CHECK(reason(Base{kA11, Vs(kA11, {"D-d1-e1", "d1-e1", "D-2e1"})}) == RejectReason::Dependent);

  const auto twice = is_base(Base{kA11, Vs(kA11, {"D-d1-e1", "d1-e1", "2d1"})});
  CHECK(twice.reason == RejectReason::TwiceRoot);
  REQUIRE(twice.witness);
  CHECK(*twice.witness == V(kA11, "d1"));

  const auto mixed = is_base(Base{kA11, Vs(kA11, {"D-d1", "d1-e1", "e1"})});
  CHECK(mixed.verdict == Verdict::Rejected);
  REQUIRE(mixed.witness);
  REQUIRE(mixed.witness_decomposition);
  CHECK_FALSE(mixed.witness_decomposition->admissible());
  CHECK(is_root(kA11, *mixed.witness));
}

TEST_CASE("imaginary elements get a mixed-sign witness") {
  const auto c = is_base(Base{kA11, Vs(kA11, {"2D", "d1-e1", "e1"})});
  CHECK(c.reason == RejectReason::Imaginary);
  REQUIRE(c.witness);
  REQUIRE(c.witness_decomposition);
  CHECK(c.witness_decomposition->sign == DecompSign::Mixed);
}

TEST_CASE("bases of S only verify at the cutoff") {
  const Base b = nolong_base();
  CHECK(is_base(b).verdict == Verdict::Certified);
  CHECK(is_base(b, 6, Subsystem::Reduced).verdict == Verdict::VerifiedAtCutoff);
  CHECK(default_kmax(b) == 6);
}

TEST_CASE("positive roots") {
  const Base b = nolong_base();
  const auto pos = positive_roots(b, 4);
  const std::set<Vector> ps(pos.begin(), pos.end());
  CHECK(ps.count(V(kA11, "2d1")) == 1);
  std::set<Vector> both = ps;
  for (const auto& v : pos) {
    CHECK(ps.count(-v) == 0);
    both.insert(-v);
  }
  std::set<Vector> window;
  for (const auto& v : enumerate(kA11, 4))
    if (!v.is_imaginary()) window.insert(v);
  for (Int k = -4; k <= 4; ++k)
    if (k != 0) both.insert(Vector::imaginary(1, 1, k));
  for (Int k = -4; k <= 4; ++k)
    if (k != 0) window.insert(Vector::imaginary(1, 1, k));
  CHECK(both == window);
  CHECK_THROWS_AS(positive_roots(Base{kA11, Vs(kA11, {"D-d1", "d1-e1", "e1"})}, 4), Error);
}
