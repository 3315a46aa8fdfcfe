#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "tars/core.hpp"

namespace tars {

/// Length class of a nonzero root.
///   Short       +-zeta + k delta
///   Long        +-zeta +- eta + k delta, zeta and eta of the same kind
///   ExtraLong   +-2 zeta + k delta
///   Nonsingular +-eps_i +- delta_p + k delta
enum class RootClass { Imaginary, Short, Long, ExtraLong, Nonsingular };

std::string_view to_string(RootClass c);

/// Which root set to work in.
///   Full       R itself
///   Reduced    S: R without its extra-long roots
///   Auxiliary  T: S plus {+-2 zeta} + 2Z delta + delta for every symbol;
///              defined only for A(2m,2n-1)^(2)
enum class Subsystem { Full, Reduced, Auxiliary };

std::string_view to_string(Subsystem s);

/// Class of v as an element of the chosen root set, or nullopt when v is not
/// in it. The zero vector is reported as absent.
std::optional<RootClass> contains(const SystemDescriptor& sys, const Vector& v, Subsystem sub = Subsystem::Full);

inline bool is_root(const SystemDescriptor& sys, const Vector& v, Subsystem sub = Subsystem::Full) {
  return contains(sys, v, sub).has_value();
}

/// Every root with |delta coefficient| <= kmax, plus 0, in canonical order.
std::vector<Vector> enumerate(const SystemDescriptor& sys, Int kmax, Subsystem sub = Subsystem::Full);

/// True iff the root v has the shape +-2 zeta + k delta. Throws NotARoot.
bool is_long_like(const SystemDescriptor& sys, const Vector& v);

/// True iff v = 2 beta for some root beta (nonzero or imaginary).
bool in_twice_roots(const SystemDescriptor& sys, const Vector& v, Subsystem sub = Subsystem::Full);

}  // namespace tars
