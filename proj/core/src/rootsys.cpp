#include "tars/rootsys.hpp"

#include <algorithm>
#include <cstdlib>

namespace tars {

std::string_view to_string(RootClass c) {
  switch (c) {
    case RootClass::Imaginary: return "imaginary";
    case RootClass::Short: return "short";
    case RootClass::Long: return "long";
    case RootClass::ExtraLong: return "extra-long";
    case RootClass::Nonsingular: return "nonsingular";
  }
  return "";
}

std::string_view to_string(Subsystem s) {
  switch (s) {
    case Subsystem::Full: return "R";
    case Subsystem::Reduced: return "S";
    case Subsystem::Auxiliary: return "T";
  }
  return "";
}

namespace {

bool short_allowed(Family f) { return f != Family::AOddOdd2; }

bool pair_allowed(Family f, Int k) {
  if (f == Family::AEvenEven4 || f == Family::D2) return floor_mod(k, 2) == 0;
  return true;
}

bool extra_long_allowed(Family f, SymbolKind kind, Int k) {
  switch (f) {
    case Family::AEvenOdd2:
    case Family::AOddOdd2:
      return kind == SymbolKind::Eps ? floor_mod(k, 2) == 1 : floor_mod(k, 2) == 0;
    case Family::AEvenEven4:
      return kind == SymbolKind::Eps ? floor_mod(k, 4) == 2 : floor_mod(k, 4) == 0;
    case Family::D2:
      return kind == SymbolKind::Del && floor_mod(k, 2) == 0;
  }
  return false;
}

}  // namespace

std::optional<RootClass> contains(const SystemDescriptor& sys, const Vector& v, Subsystem sub) {
  require_compatible(sys, v);
  if (sub == Subsystem::Auxiliary && sys.family != Family::AEvenOdd2)
    throw Error(ErrorKind::OutOfScope, "the auxiliary system T is defined only for A(2m,2n-1)^(2)");

  const Int k = v.delta();
  Symbol first{}, second{};
  Int c1 = 0, c2 = 0;
  int count = 0;
  for (const Symbol& s : all_symbols(sys.m, sys.n)) {
    Int c = v.coord(s);
    if (c == 0) continue;
    if (++count > 2) return std::nullopt;
    if (count == 1) {
      first = s;
      c1 = c;
    } else {
      second = s;
      c2 = c;
    }
  }

  if (count == 0) {
    if (k == 0) return std::nullopt;
    return RootClass::Imaginary;
  }
  if (count == 1) {
    if (std::abs(c1) == 1) {
      if (!short_allowed(sys.family)) return std::nullopt;
      return RootClass::Short;
    }
    if (std::abs(c1) == 2) {
      switch (sub) {
        case Subsystem::Full:
          if (!extra_long_allowed(sys.family, first.kind, k)) return std::nullopt;
          return RootClass::ExtraLong;
        case Subsystem::Reduced:
          return std::nullopt;
        case Subsystem::Auxiliary:
          if (floor_mod(k, 2) != 1) return std::nullopt;
          return RootClass::ExtraLong;
      }
    }
    return std::nullopt;
  }
  if (std::abs(c1) != 1 || std::abs(c2) != 1) return std::nullopt;
  if (!pair_allowed(sys.family, k)) return std::nullopt;
  return first.kind == second.kind ? RootClass::Long : RootClass::Nonsingular;
}

std::vector<Vector> enumerate(const SystemDescriptor& sys, Int kmax, Subsystem sub) {
  if (kmax < 0) throw Error(ErrorKind::InvalidArgument, "enumerate: kmax must be nonnegative");
  const int m = sys.m, n = sys.n;
  const auto symbols = all_symbols(m, n);

  // Every shape that can occur at a fixed delta level, filtered per level.
  std::vector<Vector> shapes;
  for (std::size_t a = 0; a < symbols.size(); ++a) {
    for (Int c : {1, -1, 2, -2}) shapes.push_back(Vector::unit(m, n, symbols[a], c));
    for (std::size_t b = a + 1; b < symbols.size(); ++b)
      for (Int ca : {1, -1})
        for (Int cb : {1, -1}) {
          Vector v = Vector::unit(m, n, symbols[a], ca);
          v.set(symbols[b], cb);
          shapes.push_back(v);
        }
  }

  std::vector<Vector> out;
  for (Int k = -kmax; k <= kmax; ++k) {
    out.push_back(Vector::imaginary(m, n, k));
    for (const Vector& s : shapes) {
      Vector v = s.shifted(k);
      if (contains(sys, v, sub)) out.push_back(std::move(v));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_long_like(const SystemDescriptor& sys, const Vector& v) {
  auto c = contains(sys, v);
  if (!c) throw Error(ErrorKind::NotARoot, "is_long_like: vector is not a root");
  return *c == RootClass::ExtraLong;
}

bool in_twice_roots(const SystemDescriptor& sys, const Vector& v, Subsystem sub) {
  require_compatible(sys, v);
  Vector half(sys.m, sys.n);
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (v[i] % 2 != 0) return false;
    half[i] = v[i] / 2;
  }
  if (half.is_zero()) return false;
  return half.is_imaginary() || contains(sys, half, sub).has_value();
}

}  // namespace tars
