#include "tars/params.hpp"

#include <set>
#include <string>
#include <tuple>

namespace tars {

std::string_view to_string(Form f) {
  switch (f) {
    case Form::T2A4: return "T2-A4";
    case Form::T2D2: return "T2-D2";
    case Form::T2A2Long: return "T2-A2-long";
    case Form::T2A2NoLong: return "T2-A2-nolong";
    case Form::B1: return "B1";
    case Form::B2: return "B2";
    case Form::B3: return "B3";
    case Form::B4: return "B4";
  }
  return "";
}

Form form_from_string(std::string_view s) {
  for (Form f : {Form::T2A4, Form::T2D2, Form::T2A2Long, Form::T2A2NoLong, Form::B1, Form::B2, Form::B3, Form::B4})
    if (to_string(f) == s) return f;
  throw Error(ErrorKind::Parse, "unknown form tag '" + std::string(s) + "'");
}

Family form_family(Form f) {
  switch (f) {
    case Form::T2A4: return Family::AEvenEven4;
    case Form::T2D2: return Family::D2;
    case Form::T2A2Long:
    case Form::T2A2NoLong: return Family::AEvenOdd2;
    default: return Family::AOddOdd2;
  }
}

std::vector<Form> forms_of(Family f) {
  switch (f) {
    case Family::AEvenEven4: return {Form::T2A4};
    case Family::D2: return {Form::T2D2};
    case Family::AEvenOdd2: return {Form::T2A2Long, Form::T2A2NoLong};
    case Family::AOddOdd2: return {Form::B1, Form::B2, Form::B3, Form::B4};
  }
  return {};
}

std::vector<Form> valid_forms(const SystemDescriptor& sys) {
  std::vector<Form> out;
  for (Form f : forms_of(sys.family)) {
    bool ok = true;
    switch (f) {
      case Form::T2A2Long: ok = sys.m >= 1; break;
      case Form::T2A2NoLong: ok = sys.n >= 1 && sys.ell() >= 2; break;
      case Form::B2: ok = sys.n >= 2; break;
      case Form::B3: ok = sys.m >= 2; break;
      default: break;
    }
    if (ok) out.push_back(f);
  }
  return out;
}

bool is_b_form(Form f) { return f == Form::B1 || f == Form::B2 || f == Form::B3 || f == Form::B4; }

bool params_less(const CanonicalParams& a, const CanonicalParams& b) {
  return std::tie(a.form, a.sign, a.zetas, a.ks) < std::tie(b.form, b.sign, b.zetas, b.ks);
}

void validate_params(const SystemDescriptor& sys, const CanonicalParams& p) {
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::InvalidArgument, std::string(to_string(p.form)) + ": " + why);
  };
  sys.validate();
  if (form_family(p.form) != sys.family) fail("form does not belong to family " + std::string(family_name(sys.family)));
  const auto ell = static_cast<std::size_t>(sys.ell());
  if (p.zetas.size() != ell) fail("expected " + std::to_string(ell) + " zetas");
  if (p.ks.size() != ell) fail("expected " + std::to_string(ell) + " k values");
  if (p.sign != 1 && p.sign != -1) fail("global sign must be +1 or -1");

  std::set<Symbol> seen;
  for (const auto& z : p.zetas) {
    if (z.sign != 1 && z.sign != -1) fail("zeta sign must be +1 or -1");
    const int limit = z.symbol.kind == SymbolKind::Eps ? sys.m : sys.n;
    if (z.symbol.index < 1 || z.symbol.index > limit) fail("zeta symbol index out of range");
    if (!seen.insert(z.symbol).second) fail("zeta_i != +-zeta_j violated");
  }

  auto first_kind = [&] { return p.zetas.front().symbol.kind; };
  auto last_kind = [&] { return p.zetas.back().symbol.kind; };
  const auto eps = SymbolKind::Eps, del = SymbolKind::Del;
  switch (p.form) {
    case Form::T2A4:
    case Form::T2D2:
      for (Int k : p.ks)
        if (floor_mod(k - p.ks.front(), 2) != 0) fail("k_i = k_j (mod 2) violated");
      break;
    case Form::T2A2Long:
      if (first_kind() != eps) fail("supp(theta_1) must lie in {eps_i}");
      break;
    case Form::T2A2NoLong:
      if (ell < 2) fail("row needs l >= 2");
      if (first_kind() != del) fail("supp(theta_1) must lie in {delta_p}");
      break;
    case Form::B1:
    case Form::B4:
      if (first_kind() != del) fail("supp(theta_1) must lie in {delta_p}");
      if (last_kind() != eps) fail("supp(theta_l) must lie in {eps_i}");
      break;
    case Form::B2:
      if (first_kind() != del) fail("supp(theta_1) must lie in {delta_p}");
      if (last_kind() != del) fail("supp(theta_l) must lie in {delta_p}");
      break;
    case Form::B3:
      if (first_kind() != eps) fail("supp(theta_1) must lie in {eps_i}");
      if (last_kind() != eps) fail("supp(theta_l) must lie in {eps_i}");
      break;
  }
}

Vector theta(const SystemDescriptor& sys, const CanonicalParams& p, std::size_t i) {
  return Vector::of(sys.m, sys.n, p.zetas.at(i), p.ks.at(i));
}

}  // namespace tars
