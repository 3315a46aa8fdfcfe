#pragma once

#include <string_view>
#include <vector>

#include "tars/core.hpp"

namespace tars {

/// Row of the classification table.
///   T2A4, T2D2     {theta_i - theta_{i+1}, theta_l, delta - theta_1}
///   T2A2Long       {-2 theta_1 + delta, theta_i - theta_{i+1}, theta_l}
///   T2A2NoLong     {delta - (theta_1 + theta_2), theta_i - theta_{i+1}, theta_l}
///   B1             {delta - (theta_1 + theta_2), theta_i - theta_{i+1}, theta_{l-1} + theta_l}
///   B2             {-2 theta_1, theta_i - theta_{i+1}, theta_{l-1} + theta_l + delta}
///   B3             {-2 theta_1 + delta, theta_i - theta_{i+1}, theta_{l-1} + theta_l}
///   B4             {-2 theta_1, theta_i - theta_{i+1}, 2 theta_l + delta}
/// where theta_i = zeta_i + k_i delta.
enum class Form { T2A4, T2D2, T2A2Long, T2A2NoLong, B1, B2, B3, B4 };

std::string_view to_string(Form f);
Form form_from_string(std::string_view s);
Family form_family(Form f);
/// Forms available for a family, in enum order.
std::vector<Form> forms_of(Family f);
/// Forms whose defining row is realizable for (family, m, n).
std::vector<Form> valid_forms(const SystemDescriptor& sys);
bool is_b_form(Form f);

struct CanonicalParams {
  Form form = Form::B1;
  std::vector<SignedSymbol> zetas;
  std::vector<Int> ks;
  int sign = 1;

  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

/// Total order used to pick one parameterization among equivalent ones.
bool params_less(const CanonicalParams& a, const CanonicalParams& b);

/// Throws InvalidArgument naming the violated clause.
void validate_params(const SystemDescriptor& sys, const CanonicalParams& p);

/// theta_i = zeta_i + k_i delta (0-based i).
Vector theta(const SystemDescriptor& sys, const CanonicalParams& p, std::size_t i);

}  // namespace tars
