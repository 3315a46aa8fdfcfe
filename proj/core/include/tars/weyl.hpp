#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tars/core.hpp"
#include "tars/rootsys.hpp"

namespace tars {

/// Kappa: even reflection for the invariant form. Star: quasi-reflection for
/// the auxiliary semidefinite form.
enum class FormTag { Kappa, Star };

struct Letter {
  Vector root;
  FormTag form = FormTag::Star;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of reflections, applied right to left: [a, b] sends v to a(b(v)).
struct ReflectionWord {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }
  ReflectionWord inverse() const;
  /// this * other: other acts first.
  ReflectionWord then_after(const ReflectionWord& other) const;

  friend bool operator==(const ReflectionWord&, const ReflectionWord&) = default;
};

Int form_value(FormTag tag, const Vector& u, const Vector& v);

/// v - 2 (v,alpha)/(alpha,alpha) alpha under the tagged form. Throws
/// IsotropicReflection when (alpha,alpha) = 0 and NonIntegral when the image
/// leaves the integer lattice.
Vector reflect(const Vector& alpha, FormTag tag, const Vector& v);

Vector apply_word(const ReflectionWord& w, const Vector& v);
std::vector<Vector> apply_word(const ReflectionWord& w, const std::vector<Vector>& vs);

enum class OperatorKind { I, J, S, T };

std::string_view to_string(OperatorKind k);

/// Arguments of the R-preserving operators of A(2m-1,2n-1)^(2):
///   I(zeta, p)          = r[2 zeta + p delta]
///   J(zeta, eta, p)     = r[zeta - eta + p delta]
///   S(zeta, eta, p, q)  = r[zeta - eta + p delta] r[zeta - eta + q delta]
///   T(zeta, eta, p, q)  = r[zeta + eta + p delta] r[zeta - eta + q delta]
struct OperatorSpec {
  OperatorKind kind = OperatorKind::I;
  SignedSymbol zeta;
  std::optional<SignedSymbol> eta;
  Int p = 0;
  Int q = 0;
};

ReflectionWord root_preserving_operator(const SystemDescriptor& sys, const OperatorSpec& spec);

/// True iff w and its inverse send every root of enumerate(sys, kmax) into
/// the root set. A certificate on the window only.
bool check_preserves_R(const ReflectionWord& w, const SystemDescriptor& sys, Int kmax,
                       Subsystem sub = Subsystem::Full);

}  // namespace tars
