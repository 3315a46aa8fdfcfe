#include "tars/weyl.hpp"

#include <algorithm>
#include <string>

namespace tars {

ReflectionWord ReflectionWord::inverse() const {
  ReflectionWord r{letters};
  std::reverse(r.letters.begin(), r.letters.end());
  return r;
}

ReflectionWord ReflectionWord::then_after(const ReflectionWord& other) const {
  ReflectionWord r{letters};
  r.letters.insert(r.letters.end(), other.letters.begin(), other.letters.end());
  return r;
}

Int form_value(FormTag tag, const Vector& u, const Vector& v) {
  return tag == FormTag::Kappa ? form_kappa(u, v) : form_star(u, v);
}

Vector reflect(const Vector& alpha, FormTag tag, const Vector& v) {
  const Int aa = form_value(tag, alpha, alpha);
  if (aa == 0)
    throw Error(ErrorKind::IsotropicReflection,
                tag == FormTag::Kappa ? "even reflection at an isotropic vector" : "quasi-reflection at a vector of zero *-norm");
  const Int num = checked_mul(2, form_value(tag, v, alpha));
  if (num % aa != 0) throw Error(ErrorKind::NonIntegral, "reflection image is not integral");
  return v - (num / aa) * alpha;
}

Vector apply_word(const ReflectionWord& w, const Vector& v) {
  Vector r = v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r = reflect(it->root, it->form, r);
  return r;
}

std::vector<Vector> apply_word(const ReflectionWord& w, const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(apply_word(w, v));
  return out;
}

std::string_view to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::I: return "I";
    case OperatorKind::J: return "J";
    case OperatorKind::S: return "S";
    case OperatorKind::T: return "T";
  }
  return "";
}

ReflectionWord root_preserving_operator(const SystemDescriptor& sys, const OperatorSpec& spec) {
  if (sys.family != Family::AOddOdd2)
    throw Error(ErrorKind::OutOfScope, "the I/J/S/T operators are defined for A(2m-1,2n-1)^(2) only");
  const int m = sys.m, n = sys.n;
  auto bad = [](const std::string& why) { throw Error(ErrorKind::InvalidArgument, why); };
  auto check_symbol = [&](const SignedSymbol& z) {
    if (z.sign != 1 && z.sign != -1) bad("signed symbol must have sign +1 or -1");
    const int limit = z.symbol.kind == SymbolKind::Eps ? m : n;
    if (z.symbol.index < 1 || z.symbol.index > limit) bad("symbol index out of range");
  };
  check_symbol(spec.zeta);
  const Vector zeta = Vector::of(m, n, spec.zeta);
  const Vector d = Vector::imaginary(m, n, 1);

  if (spec.kind == OperatorKind::I) {
    const bool del = spec.zeta.symbol.kind == SymbolKind::Del;
    if (del && floor_mod(spec.p, 2) != 0) bad("I: p must be even when zeta is a delta_p symbol");
    if (!del && floor_mod(spec.p, 2) != 1) bad("I: p must be odd when zeta is an eps_i symbol");
    return ReflectionWord{{Letter{2 * zeta + spec.p * d, FormTag::Star}}};
  }

  if (!spec.eta) bad(std::string(to_string(spec.kind)) + ": eta is required");
  check_symbol(*spec.eta);
  if (spec.eta->symbol == spec.zeta.symbol) bad("zeta and eta must satisfy zeta != +-eta");
  const Vector eta = Vector::of(m, n, *spec.eta);

  switch (spec.kind) {
    case OperatorKind::J:
      if (spec.eta->symbol.kind != spec.zeta.symbol.kind) bad("J: zeta and eta must be of the same kind");
      return ReflectionWord{{Letter{zeta - eta + spec.p * d, FormTag::Star}}};
    case OperatorKind::S:
      return ReflectionWord{{Letter{zeta - eta + spec.p * d, FormTag::Star}, Letter{zeta - eta + spec.q * d, FormTag::Star}}};
    case OperatorKind::T:
      return ReflectionWord{{Letter{zeta + eta + spec.p * d, FormTag::Star}, Letter{zeta - eta + spec.q * d, FormTag::Star}}};
    case OperatorKind::I:
      break;
  }
  return {};
}

bool check_preserves_R(const ReflectionWord& w, const SystemDescriptor& sys, Int kmax, Subsystem sub) {
  const ReflectionWord inv = w.inverse();
  auto in_set = [&](const Vector& v) { return v.is_imaginary() || is_root(sys, v, sub); };
  for (const Vector& a : enumerate(sys, kmax, sub)) {
    if (a.is_zero()) continue;
    try {
      if (!in_set(apply_word(w, a)) || !in_set(apply_word(inv, a))) return false;
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NonIntegral) return false;
      throw;
    }
  }
  return true;
}

}  // namespace tars
