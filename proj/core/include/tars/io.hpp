#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tars/bases.hpp"
#include "tars/canon.hpp"
#include "tars/core.hpp"
#include "tars/oracle.hpp"
#include "tars/weyl.hpp"

namespace tars {

using json = nlohmann::ordered_json;

// Text forms. Vectors print as "2d1+2D", "e1-e2", "-D", "0"; the parser also
// accepts spaces and an optional '*' between coefficient and symbol.
std::string to_text(Symbol s);
std::string to_text(const SignedSymbol& s);
std::string to_text(const Vector& v);
Vector parse_vector(std::string_view text, int m, int n);

/// Letters print as "r*[2d1+2D]" (quasi) or "rk[e1-e2]" (even), joined by " . ".
std::string to_text(const ReflectionWord& w);
ReflectionWord parse_word(std::string_view text, int m, int n);

json to_json(const SystemDescriptor& sys);
SystemDescriptor system_from_json(const json& j);

json to_json(const Vector& v);
Vector vector_from_json(const json& j, int m, int n);

json to_json(const SignedSymbol& s);
SignedSymbol signed_symbol_from_json(const json& j);

json to_json(const ReflectionWord& w);
ReflectionWord word_from_json(const json& j, int m, int n);

json to_json(const CanonicalParams& p);
CanonicalParams params_from_json(const json& j);

json to_json(const Base& b);
/// Accepts {"family","m","n","elements":[...]} or a bare array of vectors when
/// a fallback system is supplied. Vectors may be JSON objects or text.
Base base_from_json(const json& j, const SystemDescriptor* fallback = nullptr);

json to_json(const Decomposition& d);
json to_json(const BaseCheck& c);
json to_json(const PropertyReport& r);

}  // namespace tars
