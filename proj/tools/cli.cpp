#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tars/bases.hpp"
#include "tars/canon.hpp"
#include "tars/io.hpp"
#include "tars/oracle.hpp"
#include "tars/rootsys.hpp"

namespace tars::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string family;
  std::optional<int> m;
  std::optional<int> n;
  std::string format = "text";
  std::string config;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "a-2m-2n1-2 | a-2m1-2n1-2 | a-2m-2n-4 | d-2")
      ->check(CLI::IsMember({"a-2m-2n1-2", "a-2m1-2n1-2", "a-2m-2n-4", "d-2"}));
  sub->add_option("--m", c.m, "number of eps symbols")->check(CLI::NonNegativeNumber);
  sub->add_option("--n", c.n, "number of delta symbols")->check(CLI::NonNegativeNumber);
  sub->add_option("--format", c.format, "text | jsonl | json")->check(CLI::IsMember({"text", "jsonl", "json"}));
  sub->add_option("--config", c.config, "JSON file with default family, m, n");
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, what + ": " + e.what());
  }
}

/// The system named by flags, falling back to the config file. nullopt when
/// neither names a family.
std::optional<SystemDescriptor> system_of(const Common& c) {
  std::string family = c.family;
  std::optional<int> m = c.m, n = c.n;
  if (!c.config.empty()) {
    const json cfg = parse_json(read_source(c.config), "config");
    if (!cfg.is_object()) throw Error(ErrorKind::Parse, "config must be a JSON object");
    if (family.empty() && cfg.contains("family")) family = cfg["family"].get<std::string>();
    if (!m && cfg.contains("m")) m = cfg["m"].get<int>();
    if (!n && cfg.contains("n")) n = cfg["n"].get<int>();
  }
  if (family.empty() && !m && !n) return std::nullopt;
  if (family.empty() || !m || !n) throw UsageError("--family, --m and --n must be given together");
  return SystemDescriptor::make(family_from_slug(family), *m, *n);
}

SystemDescriptor require_system(const Common& c) {
  auto sys = system_of(c);
  if (!sys) throw UsageError("this subcommand needs --family, --m and --n (or --config)");
  return *sys;
}

Base load_base(const Common& c, const std::string& path) {
  const auto sys = system_of(c);
  Base b = base_from_json(parse_json(read_source(path), "base"), sys ? &*sys : nullptr);
  if (sys && !(b.sys == *sys))
    throw Error(ErrorKind::DimensionMismatch, "base describes " + std::string(family_slug(b.sys.family)) + " m=" +
                                                  std::to_string(b.sys.m) + " n=" + std::to_string(b.sys.n) +
                                                  " but the flags name another system");
  return b;
}

std::string join_text(const std::vector<Vector>& vs) {
  std::string s;
  for (const auto& v : vs) s += (s.empty() ? "" : ", ") + to_text(v);
  return "{" + s + "}";
}

void emit(std::ostream& out, const std::string& format, const json& j) {
  if (format == "json")
    out << j.dump(2) << "\n";
  else
    out << j.dump() << "\n";
}

void emit_records(std::ostream& out, const std::string& format, const json& records) {
  if (format == "json") {
    out << records.dump(2) << "\n";
    return;
  }
  for (const auto& r : records) out << r.dump() << "\n";
}

// ---------------------------------------------------------------- subcommands

struct EnumArgs {
  Int kmax = 2;
  std::string sub = "R";
};

Subsystem subsystem_of(const std::string& s) {
  if (s == "S") return Subsystem::Reduced;
  if (s == "T") return Subsystem::Auxiliary;
  return Subsystem::Full;
}

int do_enum(const Common& c, const EnumArgs& a, std::ostream& out) {
  const auto sys = require_system(c);
  const Subsystem sub = subsystem_of(a.sub);
  const auto roots = enumerate(sys, a.kmax, sub);
  json records = json::array();
  for (const auto& v : roots) {
    const auto cls = contains(sys, v, sub);
    const std::string tag = cls ? std::string(to_string(*cls)) : "zero";
    if (c.format == "text") {
      out << to_text(v) << "\t" << tag << "\n";
      continue;
    }
    json r = to_json(v);
    r["text"] = to_text(v);
    r["class"] = tag;
    records.push_back(r);
  }
  if (c.format != "text") emit_records(out, c.format, records);
  return 0;
}

struct CheckArgs {
  std::string input;
  std::optional<Int> kmax;
  std::string sub = "R";
};

int do_check(const Common& c, const CheckArgs& a, std::ostream& out) {
  const Base b = load_base(c, a.input);
  const auto res = is_base(b, a.kmax, subsystem_of(a.sub));
  if (c.format == "text") {
    out << "verdict: " << to_string(res.verdict) << "\n";
    out << "kmax: " << res.kmax << "\n";
    if (res.verdict == Verdict::Rejected) out << "reason: " << to_string(res.reason) << "\n";
    if (res.witness) out << "witness: " << to_text(*res.witness) << "\n";
    if (res.witness_decomposition) {
      out << "coefficients:";
      for (const auto& x : res.witness_decomposition->coeffs) out << " " << x.str();
      out << "\n";
    }
    if (res.params) out << "form: " << to_string(res.params->form) << "\nparams: " << to_json(*res.params).dump() << "\n";
  } else {
    emit(out, c.format, to_json(res));
  }
  switch (res.verdict) {
    case Verdict::Certified: return 0;
    case Verdict::VerifiedAtCutoff: return 1;
    case Verdict::Rejected: return 2;
  }
  return 2;
}

int do_classify(const Common& c, const std::string& input, std::ostream& out) {
  const Base b = load_base(c, input);
  const auto all = all_parameterizations(b);
  if (all.empty()) throw Error(ErrorKind::Unverified, "no canonical row produces this set");
  if (c.format == "text") {
    out << "form: " << to_string(all.front().form) << "\nparams: " << to_json(all.front()).dump() << "\n";
    out << "parameterizations: " << all.size() << "\n";
    return 0;
  }
  json j = to_json(all.front());
  j["parameterizations"] = all.size();
  emit(out, c.format, j);
  return 0;
}

int do_conjugate(const Common& c, const std::string& first, const std::string& second, std::ostream& out) {
  const Base b = load_base(c, first);
  const Base bp = load_base(c, second);
  if (!(b.sys == bp.sys)) throw Error(ErrorKind::DimensionMismatch, "the two bases belong to different systems");
  std::optional<ReflectionWord> w;
  std::string reason;
  if (!are_conjugate(b, bp)) {
    reason = "different rows";
  } else {
    try {
      w = conjugacy_word(b, bp);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotConjugate) throw;
      reason = e.what();
    }
  }
  if (c.format == "text") {
    if (w)
      out << "conjugate: " << to_text(*w) << "\n";
    else
      out << "not conjugate: " << reason << "\n";
    return 0;
  }
  json j{{"conjugate", w.has_value()}};
  if (w) {
    j["word"] = to_json(*w);
    j["word_text"] = to_text(*w);
  } else {
    j["reason"] = reason;
  }
  emit(out, c.format, j);
  return 0;
}

struct PosrootsArgs {
  std::string params_file;
  std::string params_inline;
  Int kmax = 4;
};

int do_posroots(const Common& c, const PosrootsArgs& a, std::ostream& out) {
  const auto sys = require_system(c);
  if (a.params_file.empty() == a.params_inline.empty()) throw UsageError("give exactly one of --params and --params-json");
  const json pj = parse_json(a.params_inline.empty() ? read_source(a.params_file) : a.params_inline, "params");
  const CanonicalParams p = params_from_json(pj);
  validate_params(sys, p);
  const auto roots = predicted_positive_roots(sys, p, a.kmax);
  json records = json::array();
  for (const auto& v : roots) {
    if (c.format == "text") {
      out << to_text(v) << "\n";
      continue;
    }
    json r = to_json(v);
    r["text"] = to_text(v);
    records.push_back(r);
  }
  if (c.format != "text") emit_records(out, c.format, records);
  return 0;
}

int do_search(const Common& c, const SearchOptions& opts, std::ostream& out) {
  const auto sys = require_system(c);
  const auto res = search_bases(sys, opts);
  json records = json::array();
  for (const auto& fb : res.bases) {
    if (c.format == "text") {
      out << to_string(fb.verdict) << "\t" << (fb.params ? std::string(to_string(fb.params->form)) : "-") << "\t"
          << (fb.params ? (fb.params->sign > 0 ? "+" : "-") : "?") << "\t" << join_text(fb.base.elements) << "\n";
      continue;
    }
    json r = to_json(fb.base);
    r["verdict"] = to_string(fb.verdict);
    r["params"] = fb.params ? to_json(*fb.params) : json(nullptr);
    records.push_back(r);
  }
  if (c.format == "text") {
    out << "# candidates " << res.candidates << ", subsets " << res.subsets_visited << ", bases " << res.bases.size()
        << "\n";
  } else if (c.format == "jsonl") {
    emit_records(out, c.format, records);
  } else {
    json j = to_json(sys);
    j["kmax_entry"] = opts.kmax_entry;
    j["kmax_root"] = opts.kmax_root;
    j["candidates"] = res.candidates;
    j["subsets_visited"] = res.subsets_visited;
    j["bases"] = records;
    emit(out, c.format, j);
  }
  return 0;
}

struct PropsArgs {
  Int kmax = 2;
  std::uint64_t seed = 0;
  std::uint64_t samples = 2000;
};

int do_props(const Common& c, const PropsArgs& a, std::ostream& out) {
  const auto sys = require_system(c);
  PropertyOptions opts;
  opts.samples = a.samples;
  const auto rep = run_property_suite(sys, a.kmax, a.seed, opts);
  if (c.format == "text") {
    for (const auto& r : rep.results) {
      out << (r.counterexamples == 0 ? "pass" : "FAIL") << "\t" << r.id << "\t" << r.mode << "\t" << r.samples
          << " samples\t" << r.counterexamples << " counterexamples";
      if (r.witness) out << "\t" << *r.witness;
      out << "\n";
    }
  } else if (c.format == "jsonl") {
    for (const auto& r : to_json(rep)["results"]) out << r.dump() << "\n";
  } else {
    emit(out, c.format, to_json(rep));
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bases of twisted affine root supersystems"};
  app.require_subcommand(1);
  Common common;

  EnumArgs enum_args;
  auto* enum_cmd = app.add_subcommand("enum", "List roots in a delta window");
  add_common(enum_cmd, common);
  enum_cmd->add_option("--kmax", enum_args.kmax, "bound on |delta coefficient|")->check(CLI::NonNegativeNumber);
  enum_cmd->add_option("--sub", enum_args.sub, "R, S or T")->check(CLI::IsMember({"R", "S", "T"}));

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Verify a candidate base; exit 0 certified, 1 verified at cutoff, 2 rejected");
  add_common(check_cmd, common);
  check_cmd->add_option("input", check_args.input, "base JSON file, or - for stdin")->required();
  check_cmd->add_option("--kmax", check_args.kmax, "verification window")->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--sub", check_args.sub, "R, S or T")->check(CLI::IsMember({"R", "S", "T"}));

  std::string classify_input;
  auto* classify_cmd = app.add_subcommand("classify", "Canonical row and parameters of a base");
  add_common(classify_cmd, common);
  classify_cmd->add_option("input", classify_input, "base JSON file, or - for stdin")->required();

  std::string conj_a, conj_b;
  auto* conj_cmd = app.add_subcommand("conjugate", "Word sending the second base onto the first");
  add_common(conj_cmd, common);
  conj_cmd->add_option("first", conj_a, "target base JSON file")->required();
  conj_cmd->add_option("second", conj_b, "source base JSON file")->required();

  PosrootsArgs pos_args;
  auto* pos_cmd = app.add_subcommand("posroots", "Positive roots of a canonical base in a window");
  add_common(pos_cmd, common);
  pos_cmd->add_option("--params", pos_args.params_file, "params JSON file, or - for stdin");
  pos_cmd->add_option("--params-json", pos_args.params_inline, "params JSON text");
  pos_cmd->add_option("--kmax", pos_args.kmax, "bound on |delta coefficient|")->check(CLI::NonNegativeNumber);

  SearchOptions search_opts;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive base search on a small system");
  add_common(search_cmd, common);
  search_cmd->add_option("--kmax-entry", search_opts.kmax_entry, "bound on |delta| of base elements")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--kmax-root", search_opts.kmax_root, "verification window")->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--budget", search_opts.budget, "largest subset count attempted");

  PropsArgs props_args;
  auto* props_cmd = app.add_subcommand("props", "Property suite over a window; exit 1 on counterexamples");
  add_common(props_cmd, common);
  props_cmd->add_option("--kmax", props_args.kmax, "window")->check(CLI::NonNegativeNumber);
  props_cmd->add_option("--seed", props_args.seed, "sampling seed");
  props_cmd->add_option("--samples", props_args.samples, "sample budget for sampled statements");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enum_cmd) return do_enum(common, enum_args, out);
    if (*check_cmd) return do_check(common, check_args, out);
    if (*classify_cmd) return do_classify(common, classify_input, out);
    if (*conj_cmd) return do_conjugate(common, conj_a, conj_b, out);
    if (*pos_cmd) return do_posroots(common, pos_args, out);
    if (*search_cmd) return do_search(common, search_opts, out);
    if (*props_cmd) return do_props(common, props_args, out);
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << json{{"error", {{"kind", to_string(e.kind())}, {"message", e.what()}}}}.dump() << "\n";
    return kExitDomain;
  } catch (const json::exception& e) {
    err << json{{"error", {{"kind", to_string(ErrorKind::Parse)}, {"message", e.what()}}}}.dump() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace tars::cli
