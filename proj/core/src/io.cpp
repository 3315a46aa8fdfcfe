#include "tars/io.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>

namespace tars {

std::string to_text(Symbol s) { return (s.kind == SymbolKind::Eps ? "e" : "d") + std::to_string(s.index); }

std::string to_text(const SignedSymbol& s) { return (s.sign < 0 ? "-" : "") + to_text(s.symbol); }

std::string to_text(const Vector& v) {
  std::string out;
  auto term = [&](Int c, const std::string& name) {
    if (c == 0) return;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    const Int a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += name;
  };
  for (const Symbol& s : all_symbols(v.m(), v.n())) term(v.coord(s), to_text(s));
  term(v.delta(), "D");
  return out.empty() ? "0" : out;
}

namespace {

[[noreturn]] void parse_error(std::string_view text, const std::string& why) {
  throw Error(ErrorKind::Parse, "cannot parse '" + std::string(text) + "': " + why);
}

Int parse_int(std::string_view digits, std::string_view text) {
  Int v = 0;
  for (char ch : digits) v = checked_add(checked_mul(v, 10), ch - '0');
  if (digits.empty()) parse_error(text, "missing digits");
  return v;
}

}  // namespace

Vector parse_vector(std::string_view text, int m, int n) {
  Vector v(m, n);
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) parse_error(text, "empty vector");
  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      parse_error(text, "expected '+' or '-'");
    }
    first = false;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const bool has_coeff = j > i;
    const Int coeff = has_coeff ? parse_int(std::string_view(s).substr(i, j - i), text) : 1;
    i = j;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) parse_error(text, "'*' without coefficient");
      ++i;
    }
    if (i >= s.size() || s[i] == '+' || s[i] == '-') {
      if (!has_coeff || coeff != 0) parse_error(text, "bare integer terms are not vectors");
      continue;
    }
    const char name = s[i++];
    if (name == 'D') {
      v.set_delta(checked_add(v.delta(), checked_mul(sign, coeff)));
      continue;
    }
    if (name != 'e' && name != 'd') parse_error(text, std::string("unknown symbol '") + name + "'");
    j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    const Int idx = parse_int(std::string_view(s).substr(i, j - i), text);
    i = j;
    const Symbol sym{name == 'e' ? SymbolKind::Eps : SymbolKind::Del, static_cast<int>(idx)};
    if (idx < 1 || idx > (name == 'e' ? m : n)) parse_error(text, "symbol " + to_text(sym) + " out of range");
    v.set(sym, checked_add(v.coord(sym), checked_mul(sign, coeff)));
  }
  return v;
}

std::string to_text(const ReflectionWord& w) {
  std::string out;
  for (const auto& l : w.letters) {
    if (!out.empty()) out += " . ";
    out += l.form == FormTag::Star ? "r*[" : "rk[";
    out += to_text(l.root) + "]";
  }
  return out.empty() ? "id" : out;
}

ReflectionWord parse_word(std::string_view text, int m, int n) {
  ReflectionWord w;
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s == "id" || s.empty()) return w;
  std::size_t i = 0;
  while (i < s.size()) {
    if (!w.letters.empty()) {
      if (s[i] != '.') parse_error(text, "expected '.' between letters");
      ++i;
    }
    if (i + 2 >= s.size() || s[i] != 'r' || (s[i + 1] != '*' && s[i + 1] != 'k') || s[i + 2] != '[')
      parse_error(text, "letters look like r*[...] or rk[...]");
    const FormTag tag = s[i + 1] == '*' ? FormTag::Star : FormTag::Kappa;
    const std::size_t close = s.find(']', i + 3);
    if (close == std::string::npos) parse_error(text, "missing ']'");
    w.letters.push_back({parse_vector(std::string_view(s).substr(i + 3, close - i - 3), m, n), tag});
    i = close + 1;
  }
  return w;
}

json to_json(const SystemDescriptor& sys) {
  return json{{"family", family_slug(sys.family)}, {"m", sys.m}, {"n", sys.n}};
}

SystemDescriptor system_from_json(const json& j) {
  try {
    return SystemDescriptor::make(family_from_slug(j.at("family").get<std::string>()), j.at("m").get<int>(),
                                  j.at("n").get<int>());
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("system: ") + e.what());
  }
}

json to_json(const Vector& v) {
  json eps = json::array(), del = json::array();
  for (int i = 1; i <= v.m(); ++i) eps.push_back(v.eps(i));
  for (int p = 1; p <= v.n(); ++p) del.push_back(v.del(p));
  return json{{"eps", eps}, {"del", del}, {"delta", v.delta()}};
}

Vector vector_from_json(const json& j, int m, int n) {
  if (j.is_string()) return parse_vector(j.get<std::string>(), m, n);
  try {
    const auto eps = j.at("eps").get<std::vector<Int>>();
    const auto del = j.at("del").get<std::vector<Int>>();
    if (eps.size() != static_cast<std::size_t>(m) || del.size() != static_cast<std::size_t>(n))
      throw Error(ErrorKind::DimensionMismatch, "vector has " + std::to_string(eps.size()) + " eps and " +
                                                    std::to_string(del.size()) + " del coordinates; expected " +
                                                    std::to_string(m) + " and " + std::to_string(n));
    std::vector<Int> c(eps);
    c.insert(c.end(), del.begin(), del.end());
    c.push_back(j.at("delta").get<Int>());
    return Vector(m, n, std::move(c));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("vector: ") + e.what());
  }
}

json to_json(const SignedSymbol& s) {
  return json{{"kind", s.symbol.kind == SymbolKind::Eps ? "e" : "d"}, {"idx", s.symbol.index}, {"sign", s.sign}};
}

SignedSymbol signed_symbol_from_json(const json& j) {
  try {
    const auto kind = j.at("kind").get<std::string>();
    if (kind != "e" && kind != "d") throw Error(ErrorKind::Parse, "symbol kind must be \"e\" or \"d\"");
    return SignedSymbol{j.at("sign").get<int>(), Symbol{kind == "e" ? SymbolKind::Eps : SymbolKind::Del, j.at("idx").get<int>()}};
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("signed symbol: ") + e.what());
  }
}

json to_json(const ReflectionWord& w) {
  json a = json::array();
  for (const auto& l : w.letters) a.push_back(json{{"form", l.form == FormTag::Star ? "*" : "k"}, {"root", to_json(l.root)}});
  return a;
}

ReflectionWord word_from_json(const json& j, int m, int n) {
  ReflectionWord w;
  try {
    for (const auto& l : j) {
      const auto f = l.at("form").get<std::string>();
      if (f != "*" && f != "k") throw Error(ErrorKind::Parse, "letter form must be \"*\" or \"k\"");
      w.letters.push_back({vector_from_json(l.at("root"), m, n), f == "*" ? FormTag::Star : FormTag::Kappa});
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("word: ") + e.what());
  }
  return w;
}

json to_json(const CanonicalParams& p) {
  json z = json::array();
  for (const auto& s : p.zetas) z.push_back(to_json(s));
  return json{{"form", to_string(p.form)}, {"zetas", z}, {"ks", p.ks}, {"sign", p.sign}};
}

CanonicalParams params_from_json(const json& j) {
  try {
    CanonicalParams p;
    p.form = form_from_string(j.at("form").get<std::string>());
    for (const auto& z : j.at("zetas")) p.zetas.push_back(signed_symbol_from_json(z));
    p.ks = j.at("ks").get<std::vector<Int>>();
    p.sign = j.value("sign", 1);
    return p;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("params: ") + e.what());
  }
}

json to_json(const Base& b) {
  json e = json::array();
  for (const auto& v : b.elements) e.push_back(to_json(v));
  json j = to_json(b.sys);
  j["elements"] = e;
  return j;
}

Base base_from_json(const json& j, const SystemDescriptor* fallback) {
  try {
    const json* elems = &j;
    SystemDescriptor sys;
    if (j.is_object()) {
      if (j.contains("family")) {
        sys = system_from_json(j);
      } else if (fallback) {
        sys = *fallback;
      } else {
        throw Error(ErrorKind::Parse, "base: missing family/m/n");
      }
      elems = &j.at("elements");
    } else if (fallback) {
      sys = *fallback;
    } else {
      throw Error(ErrorKind::Parse, "base: a bare array needs --family/--m/--n");
    }
    if (!elems->is_array()) throw Error(ErrorKind::Parse, "base: elements must be an array");
    Base b{sys, {}};
    for (const auto& v : *elems) b.elements.push_back(vector_from_json(v, sys.m, sys.n));
    return b;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("base: ") + e.what());
  }
}

json to_json(const Decomposition& d) {
  json c = json::array();
  for (const auto& x : d.coeffs) c.push_back(x.str());
  return json{{"coeffs", c}, {"integral", d.integral}, {"sign", to_string(d.sign)}};
}

json to_json(const BaseCheck& c) {
  json j{{"verdict", to_string(c.verdict)}, {"kmax", c.kmax}};
  if (c.verdict == Verdict::Rejected) j["reason"] = to_string(c.reason);
  if (c.witness) j["witness"] = to_json(*c.witness);
  if (c.witness) j["witness_text"] = to_text(*c.witness);
  if (c.witness_decomposition) j["witness_decomposition"] = to_json(*c.witness_decomposition);
  if (c.params) j["params"] = to_json(*c.params);
  return j;
}

json to_json(const PropertyReport& r) {
  json results = json::array();
  for (const auto& x : r.results) {
    json e{{"id", x.id}, {"statement", x.statement}, {"mode", x.mode}, {"samples", x.samples},
           {"counterexamples", x.counterexamples}, {"status", x.counterexamples == 0 ? "pass" : "fail"}};
    e["witness"] = x.witness ? json(*x.witness) : json(nullptr);
    results.push_back(e);
  }
  json j = to_json(r.sys);
  j["kmax"] = r.kmax;
  j["seed"] = r.seed;
  j["ok"] = r.ok();
  j["results"] = results;
  return j;
}

}  // namespace tars
