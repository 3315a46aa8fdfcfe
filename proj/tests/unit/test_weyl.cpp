#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "../support/systems.hpp"
#include "tars/weyl.hpp"

using namespace tars;
using tars::testing::V;

namespace {

SignedSymbol eps(int i, int sign = 1) { return {sign, {SymbolKind::Eps, i}}; }
SignedSymbol del(int p, int sign = 1) { return {sign, {SymbolKind::Del, p}}; }

}  // namespace

TEST_CASE("quasi-reflection sends 2 delta_1 to 2 eps_1") {
  const auto sys = SystemDescriptor::make(Family::D2, 1, 1);
  CHECK(reflect(V(sys, "e1-d1"), FormTag::Star, V(sys, "2d1")) == V(sys, "2e1"));
  CHECK_FALSE(is_root(sys, V(sys, "2e1")));
}

TEST_CASE("reflections fix their axis up to sign and are involutions") {
  const auto sys = SystemDescriptor::make(Family::AEvenOdd2, 2, 1);
  std::mt19937_64 rng(3);
  const auto roots = enumerate(sys, 2);
  for (const auto& a : roots) {
    if (form_star(a, a) == 0) continue;
    CHECK(reflect(a, FormTag::Star, a) == -a);
    for (int i = 0; i < 5; ++i) {
      const Vector& v = roots[std::uniform_int_distribution<std::size_t>(0, roots.size() - 1)(rng)];
      try {
        CHECK(reflect(a, FormTag::Star, reflect(a, FormTag::Star, v)) == v);
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonIntegral);
      }
    }
  }
}

TEST_CASE("even reflection") {
  const auto sys = SystemDescriptor::make(Family::AEvenOdd2, 2, 1);
  CHECK(reflect(V(sys, "e1-e2"), FormTag::Kappa, V(sys, "e1+3D")) == V(sys, "e2+3D"));
  CHECK(reflect(V(sys, "d1"), FormTag::Kappa, V(sys, "d1+e1")) == V(sys, "-d1+e1"));
  try {
    reflect(V(sys, "e1-d1"), FormTag::Kappa, V(sys, "e1"));
    FAIL("expected isotropic error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IsotropicReflection);
  }
  try {
    reflect(V(sys, "3D"), FormTag::Star, V(sys, "e1"));
    FAIL("expected isotropic error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IsotropicReflection);
  }
}

TEST_CASE("non-integral images are refused") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 1, 2);
  try {
    reflect(V(sys, "e1+d1+d2"), FormTag::Star, V(sys, "e1"));
    FAIL("expected non-integral error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonIntegral);
  }
}

TEST_CASE("words apply right to left") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 1);
  const Vector a = V(sys, "e1-e2"), b = V(sys, "e2-d1+D");
  CHECK(apply_word(ReflectionWord{}, a) == a);
  CHECK(apply_word(ReflectionWord{{Letter{a, FormTag::Star}}}, a) == -a);
  const ReflectionWord w{{Letter{a, FormTag::Star}, Letter{b, FormTag::Star}}};
  const Vector v = V(sys, "2e2+D");
  CHECK(apply_word(w, v) == reflect(a, FormTag::Star, reflect(b, FormTag::Star, v)));
  CHECK(apply_word(w.inverse(), apply_word(w, v)) == v);
  const ReflectionWord first{{Letter{b, FormTag::Star}}}, second{{Letter{a, FormTag::Star}}};
  CHECK(second.then_after(first) == w);
}

TEST_CASE("operator words") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 1);
  const auto i_word = root_preserving_operator(sys, {OperatorKind::I, del(1), std::nullopt, 2, 0});
  REQUIRE(i_word.size() == 1);
  CHECK(i_word.letters[0].root == V(sys, "2d1+2D"));
  CHECK_THROWS_AS(root_preserving_operator(sys, {OperatorKind::I, eps(1), std::nullopt, 2, 0}), Error);
  CHECK_THROWS_AS(root_preserving_operator(sys, {OperatorKind::J, eps(1), del(1), 0, 0}), Error);
  CHECK_THROWS_AS(root_preserving_operator(sys, {OperatorKind::S, eps(1), eps(1, -1), 0, 0}), Error);
  CHECK_THROWS_AS(root_preserving_operator(SystemDescriptor::make(Family::D2, 1, 1), {OperatorKind::I, del(1), std::nullopt, 0, 0}),
                  Error);

  const auto t_word = root_preserving_operator(sys, {OperatorKind::T, eps(1), eps(2), 1, 3});
  REQUIRE(t_word.size() == 2);
  CHECK(check_preserves_R(t_word, sys, 4));
  const Vector v = V(sys, "e1-d1+D");
  CHECK(apply_word(t_word, v) ==
        reflect(V(sys, "e1+e2+D"), FormTag::Star, reflect(V(sys, "e1-e2+3D"), FormTag::Star, v)));
}

TEST_CASE("R preservation") {
  const auto sys = SystemDescriptor::make(Family::AOddOdd2, 2, 1);
  CHECK(check_preserves_R(ReflectionWord{}, sys, 5));
  for (auto spec : {OperatorSpec{OperatorKind::I, eps(2, -1), std::nullopt, 3, 0},
                    OperatorSpec{OperatorKind::J, eps(1), eps(2, -1), -2, 0},
                    OperatorSpec{OperatorKind::S, del(1), eps(1), 1, -2},
                    OperatorSpec{OperatorKind::T, eps(2), del(1, -1), 0, 1}})
    CHECK(check_preserves_R(root_preserving_operator(sys, spec), sys, 5));
  const auto d2 = SystemDescriptor::make(Family::D2, 1, 1);
  CHECK_FALSE(check_preserves_R(ReflectionWord{{Letter{V(d2, "e1-d1"), FormTag::Star}}}, d2, 5));
}
