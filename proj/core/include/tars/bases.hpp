#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tars/core.hpp"
#include "tars/params.hpp"
#include "tars/rational.hpp"
#include "tars/rootsys.hpp"

namespace tars {

struct Base {
  SystemDescriptor sys;
  std::vector<Vector> elements;

  /// Elements in canonical order, for set comparison.
  std::vector<Vector> sorted() const;
  bool same_set(const Base& other) const { return sys == other.sys && sorted() == other.sorted(); }
  Base negated() const;
};

enum class DecompSign { Positive, Negative, Zero, Mixed };

std::string_view to_string(DecompSign s);

struct Decomposition {
  std::vector<Rational> coeffs;
  bool integral = true;
  DecompSign sign = DecompSign::Zero;

  bool admissible() const { return integral && sign != DecompSign::Mixed; }
};

/// Precomputed exact inverse of a square basis; decompositions are then a
/// single integer matrix-vector product followed by division by a common
/// denominator.
class Decomposer {
 public:
  /// Throws Dependent when the vectors are not a basis of V.
  explicit Decomposer(const std::vector<Vector>& basis);

  Decomposition operator()(const Vector& v) const;
  /// Cheap check: integral with uniform sign (or zero).
  bool admissible(const Vector& v) const;

 private:
  int m_ = 0;
  int n_ = 0;
  std::size_t d_ = 0;
  std::vector<Int> num_;  // row-major d x d
  Int den_ = 1;
};

Decomposition decompose(const Base& base, const Vector& v);

enum class Verdict { Certified, VerifiedAtCutoff, Rejected };

std::string_view to_string(Verdict v);

enum class RejectReason { None, WrongSize, NotARoot, Dependent, Imaginary, TwiceRoot, NonIntegral, MixedSign };

std::string_view to_string(RejectReason r);

struct BaseCheck {
  Verdict verdict = Verdict::Rejected;
  RejectReason reason = RejectReason::None;
  Int kmax = 0;
  std::optional<Vector> witness;
  std::optional<Decomposition> witness_decomposition;
  std::optional<CanonicalParams> params;
};

/// max(4, 2 (max |delta coefficient| in the elements + family period)).
Int default_kmax(const Base& base);

/// Three-valued base verification. Structural failures are checked first
/// (size, membership, independence, imaginary elements, elements in 2R); then
/// every root with |delta coefficient| <= kmax must decompose integrally with
/// uniform sign. Certification additionally needs recognition of a canonical
/// row, and is only attempted for the full root set.
BaseCheck is_base(const Base& base, std::optional<Int> kmax = std::nullopt, Subsystem sub = Subsystem::Full);

/// Nonzero roots of the window whose decomposition is positive. Throws
/// Unverified if some root of the window fails to decompose admissibly.
std::vector<Vector> positive_roots(const Base& base, Int kmax, Subsystem sub = Subsystem::Full);

}  // namespace tars
