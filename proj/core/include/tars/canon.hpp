#pragma once

#include <optional>
#include <vector>

#include "tars/bases.hpp"
#include "tars/params.hpp"
#include "tars/weyl.hpp"

namespace tars {

/// The row's roots, multiplied by the global sign, in the order the row lists
/// them. Throws InvalidArgument on invalid params.
Base build_base(const SystemDescriptor& sys, const CanonicalParams& p);

/// Closed-form positive system of the row intersected with the window. The
/// T2-A4 and T2-D2 rows have no printed closed form; their positives come from
/// the decomposition engine.
std::vector<Vector> predicted_positive_roots(const SystemDescriptor& sys, const CanonicalParams& p, Int kmax);

/// Every parameterization (over all rows of the family and both global signs)
/// whose build_base equals the given set. Sorted by params_less.
std::vector<CanonicalParams> all_parameterizations(const Base& base);

/// The least parameterization, or nullopt when no row matches.
std::optional<CanonicalParams> match_canonical(const Base& base);

/// A word and the base it produces from the input, together with the params
/// the construction tracked for the output.
struct Normalization {
  ReflectionWord word;
  Base base;
  CanonicalParams params;
};

/// True iff every zeta_i has sign +1.
bool is_fine(const CanonicalParams& p);
/// Largest t with k_1 = ... = k_t = 0.
std::size_t admissible_prefix(const CanonicalParams& p);

Normalization make_fine(const SystemDescriptor& sys, const CanonicalParams& p);
Normalization make_fine(const Base& base);

/// Requires fine params. B1 ends (l-1)-admissible; B2-B4 end l-admissible.
Normalization make_admissible(const SystemDescriptor& sys, const CanonicalParams& p);
/// Uses a fine parameterization of the base; throws if none exists.
Normalization make_admissible(const Base& base);

/// make_fine followed by make_admissible; the word is the composite.
Normalization normalize(const Base& base);

/// Row-level conjugacy: both bases must certify; true iff they share a row.
bool are_conjugate(const Base& b, const Base& b_prime);

/// A word w with w(b_prime) = b as sets. Rows B2-B4 use the alignment of
/// symbols after normalization; the other rows descend by simple reflections
/// inside S (or T for the row with an extra-long root).
ReflectionWord conjugacy_word(const Base& b, const Base& b_prime);

}  // namespace tars
