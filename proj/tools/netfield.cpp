// netfield: construct multicast network families and decide their linear
// solvability over GF(q).
//
// Exit codes: 0 ok / solvable, 1 reproduction mismatch, 2 invalid input,
// 3 enumeration cap exceeded, 10 unsolvable, 11 unknown (search budget).

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "netfield/constructors.hpp"
#include "netfield/error.hpp"
#include "netfield/numbertheory.hpp"
#include "netfield/presets.hpp"
#include "netfield/serialize.hpp"
#include "netfield/solver.hpp"

using namespace netfield;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kInvalid = 2;
constexpr int kCapExceeded = 3;
constexpr int kUnsolvable = 10;
constexpr int kUnknown = 11;

struct Config {
  std::string family;
  int omega = 0;
  int d1 = 0;
  int d2 = 0;
  int m = 0;
  int n = 0;
  std::string net_path;
  std::string q;
  std::string method = "auto";
  std::uint64_t budget = 0;
  std::uint64_t cap = kDefaultSubsetCap;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  bool normalize = true;
  bool deterministic = false;
  unsigned threads = 1;
  std::string output;
  std::string dot;
  std::string format = "json";
  std::string run_log;
  std::string preset;
  bool all_presets = false;
};

std::uint64_t default_budget() {
  if (const char* env = std::getenv("NETFIELD_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Errc::InvalidParam, "NETFIELD_BUDGET is not an integer");
    }
  }
  return kDefaultBudget;
}

SearchOptions search_options(const Config& c) { return {c.budget ? c.budget : default_budget(), c.threads}; }

FamilyTag family_tag(const Config& c) {
  const auto need = [&](int v, const char* flag) {
    if (v == 0) throw Error(Errc::InvalidParam, "--family " + c.family + " needs " + flag);
    return v;
  };
  if (c.family == "general") return GeneralParams{need(c.omega, "--omega"), need(c.d1, "--d1"), need(c.d2, "--d2")};
  if (c.family == "swirl") return SwirlFamily{need(c.omega, "--omega")};
  if (c.family == "fig2a") return Fig2aFamily{};
  if (c.family == "fig2b") return Fig2bFamily{};
  if (c.family == "lowerbound") return LowerBoundFamily{need(c.m, "--m")};
  if (c.family == "combination") return CombinationFamily{need(c.n, "--n"), need(c.omega, "--omega")};
  if (c.family.empty()) throw Error(Errc::InvalidParam, "give --family or --net");
  throw Error(Errc::InvalidParam, "unknown family '" + c.family + "'");
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot read " + path);
  try {
    return network_from_json(json::parse(in));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::optional<FamilyTag> family_of(const Network& net) {
  const auto& f = net.family();
  if (f.is_null() || f.contains("expanded_omega")) return std::nullopt;
  return family_from_json(f);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(Errc::InvalidParam, "cannot write " + path);
  out << text;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s) {
  try {
    const auto dots = s.find("..");
    if (dots == std::string::npos) {
      const auto q = std::stoull(s);
      return {q, q};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error(Errc::InvalidParam, "bad --q value '" + s + "' (expected N or LO..HI)");
  }
}

int exit_for(Status s) {
  switch (s) {
    case Status::Solvable: return kOk;
    case Status::Unsolvable: return kUnsolvable;
    case Status::Unknown: return kUnknown;
  }
  return kUnknown;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

// ---- commands ------------------------------------------------------------

int cmd_construct(const Config& c, json& summary) {
  const auto net = build_family(family_tag(c), c.cap);
  write_text(c.output, network_to_json(net).dump(2) + "\n");
  if (!c.dot.empty()) write_text(c.dot, to_dot(net));
  summary = {{"nodes", net.node_count()}, {"edges", net.edge_count()}, {"receivers", net.receivers().size()}};
  return kOk;
}

int cmd_analyze(const Config& c, json& summary) {
  if (c.q.empty()) throw Error(Errc::InvalidParam, "--q is required");
  const auto q = parse_range(c.q).first;
  const auto field = make_field(q);
  std::optional<Network> net;
  std::optional<FamilyTag> tag;
  if (!c.net_path.empty()) {
    net = load_network(c.net_path);
    tag = family_of(*net);
  } else {
    tag = family_tag(c);
  }
  const auto opts = search_options(c);
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  if (c.method == "random") {
    if (!net) net = build_family(*tag, c.cap);
    v = oracle_random(*net, field, c.trials, c.seed);
  } else {
    const auto method = parse_scan_method(c.method);
    if (tag) {
      ScanOptions so{opts, c.normalize, c.cap};
      v = *scan_family(*tag, q, q, method, so).verdicts.front().verdict;
    } else if (method == ScanMethod::Oracle || method == ScanMethod::Auto) {
      v = oracle_exhaustive(*net, field, opts.budget, c.normalize);
    } else {
      throw Error(Errc::InvalidParam, "the network carries no family; use --method oracle or random");
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  if (v.code && !net) net = build_family(*tag, c.cap);

  json out = verdict_to_json(*field, net ? &*net : nullptr, v, !c.deterministic);
  out["q"] = q;
  out["field"] = field_to_json(*field);
  out["elapsed_ms"] = c.deterministic ? 0 : elapsed;
  std::string matrix;
  if (v.assignment && tag) {
    matrix = witness_matrix(*field, *condition_params(*tag), *v.assignment);
    out["matrix"] = lines(matrix);
  }
  if (c.format == "text") {
    std::ostringstream os;
    os << "GF(" << q << "): " << status_name(v.status) << " [" << v.method << "]\n";
    if (!v.proof.empty()) os << "  " << v.proof << "\n";
    if (!matrix.empty()) os << matrix;
    if (v.code && net) {
      for (const auto& pair : indeterminates(*net)) {
        os << "  k(e" << pair.in << ", e" << pair.out << ") = " << field->format(*v.code->get(pair)) << "\n";
      }
    }
    write_text(c.output, os.str());
  } else {
    write_text(c.output, out.dump(2) + "\n");
  }
  summary = {{"q", q}, {"status", status_name(v.status)}, {"method", v.method}};
  return exit_for(v.status);
}

int cmd_scan(const Config& c, json& summary) {
  if (c.q.empty()) throw Error(Errc::InvalidParam, "--q LO..HI is required");
  const auto [lo, hi] = parse_range(c.q);
  const auto tag = c.net_path.empty() ? family_tag(c) : family_of(load_network(c.net_path)).value();
  ScanOptions so{search_options(c), c.normalize, c.cap};
  const auto r = scan_family(tag, lo, hi, parse_scan_method(c.method), so);
  const auto j = scan_to_json(r, c.deterministic);
  if (c.format == "text" || !c.output.empty()) {
    std::ostringstream os;
    os << family_name(tag) << "  q in [" << lo << ", " << hi << "]\n";
    for (const auto& e : r.verdicts) {
      if (!e.verdict) continue;
      os << "  q = " << e.q << "\t" << e.status() << "\t" << e.method;
      if (!c.deterministic) os << "\t" << e.elapsed_ms << " ms";
      os << "\n";
    }
    os << "  q_min: " << (r.q_min ? std::to_string(*r.q_min) : "none") << "\n  unsolvable above q_min:";
    for (auto q : r.exceptional_q) os << ' ' << q;
    os << "\n";
    std::cout << os.str();
  }
  if (!c.output.empty()) {
    write_text(c.output, j.dump(2) + "\n");
  } else if (c.format != "text") {
    std::cout << j.dump(2) << "\n";
  }
  summary = {{"q_min", j["q_min"]}, {"exceptional_q", j["exceptional_q"]}};
  return kOk;
}

int cmd_reproduce(const Config& c, json& summary) {
  std::vector<std::string> names;
  if (c.all_presets) {
    names = preset_names();
  } else if (!c.preset.empty()) {
    names = {c.preset};
  } else {
    throw Error(Errc::InvalidParam, "name a preset or pass --all");
  }
  bool ok = true;
  summary = json::object();
  for (const auto& name : names) {
    const auto report = run_preset(name, search_options(c));
    std::cout << name << "\n";
    for (const auto& claim : report.claims) {
      std::cout << "  " << (claim.pass ? "✓" : "✗") << " " << claim.claim;
      if (!claim.detail.empty()) std::cout << "  (" << claim.detail << ")";
      std::cout << "\n";
    }
    ok = ok && report.ok();
    summary[name] = report.ok();
  }
  return ok ? kOk : kMismatch;
}

int cmd_export_dot(const Config& c, json& summary) {
  const auto net = c.net_path.empty() ? build_family(family_tag(c), c.cap) : load_network(c.net_path);
  write_text(c.output, to_dot(net));
  summary = {{"nodes", net.node_count()}};
  return kOk;
}

int cmd_field_info(const Config& c, json& summary) {
  if (c.q.empty()) throw Error(Errc::InvalidParam, "--q is required");
  const auto field = make_field(parse_range(c.q).first);
  json j = field_to_json(*field);
  j["primitive_element"] = field->xi();
  j["primitive_element_text"] = field->format(field->xi());
  j["subgroup_orders"] = proper_subgroup_orders(field);
  if (c.format == "text") {
    std::ostringstream os;
    os << "GF(" << field->q() << ") = GF(" << field->p() << "^" << field->m() << ")\n"
       << "modulus encoding: " << field->modulus_encoding() << "\n"
       << "primitive element: " << field->xi() << "\n"
       << "proper subgroup orders:";
    for (auto d : proper_subgroup_orders(field)) os << ' ' << d;
    os << "\n";
    write_text(c.output, os.str());
  } else {
    write_text(c.output, j.dump(2) + "\n");
  }
  summary = {{"q", field->q()}};
  return kOk;
}

void add_family_flags(CLI::App* sub, Config& c) {
  sub->add_option("--family", c.family, "general|swirl|fig2a|fig2b|lowerbound|combination");
  sub->add_option("--omega", c.omega, "source dimension");
  sub->add_option("--d1", c.d1, "fan of v_1..v_{omega-1}");
  sub->add_option("--d2", c.d2, "fan of v_omega");
  sub->add_option("--m", c.m, "lower-bound family size");
  sub->add_option("--n", c.n, "combination network relays");
  sub->add_option("--cap", c.cap, "receiver enumeration cap");
}

void add_search_flags(CLI::App* sub, Config& c) {
  sub->add_option("--method", c.method, "auto|condition|oracle|characterization|random");
  sub->add_option("--budget", c.budget, "search budget (default 1e8 or NETFIELD_BUDGET)");
  sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_flag("--normalize,!--no-normalize", c.normalize, "restrict the first coefficient per edge to {0, 1}");
  sub->add_flag("--deterministic", c.deterministic, "drop timings and counters from the output");
}

void append_log(const std::string& path, const std::string& command, const std::vector<std::string>& argv,
                int code, const json& summary) {
  if (path.empty()) return;
  std::ofstream log(path, std::ios::app);
  log << json{{"command", command}, {"argv", argv}, {"exit", code}, {"result", summary}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear network coding solvability over finite fields"};
  app.require_subcommand(1);
  Config c;
  app.add_option("--run-log", c.run_log, "append a JSON line per run to this file");

  auto* construct = app.add_subcommand("construct", "build a network family and write its JSON");
  add_family_flags(construct, c);
  construct->add_option("-o,--output", c.output, "output path (default stdout)");
  construct->add_option("--dot", c.dot, "also write Graphviz DOT here");

  auto* analyze = app.add_subcommand("analyze", "decide solvability over one field");
  add_family_flags(analyze, c);
  add_search_flags(analyze, c);
  analyze->add_option("--net", c.net_path, "network JSON file");
  analyze->add_option("--q", c.q, "field size");
  analyze->add_option("--trials", c.trials, "random oracle trials");
  analyze->add_option("--seed", c.seed, "random oracle seed");
  analyze->add_option("--format", c.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("-o,--output", c.output, "output path (default stdout)");

  auto* scan = app.add_subcommand("scan", "decide solvability over a range of fields");
  add_family_flags(scan, c);
  add_search_flags(scan, c);
  scan->add_option("--net", c.net_path, "network JSON file carrying a family block");
  scan->add_option("--q", c.q, "range LO..HI");
  scan->add_option("--format", c.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  scan->add_option("-o,--output", c.output, "write the scan JSON here and a table to stdout");

  auto* reproduce = app.add_subcommand("reproduce", "check a bundled set of expected verdicts");
  reproduce->add_option("preset", c.preset, "preset name");
  reproduce->add_flag("--all", c.all_presets, "run every preset");
  reproduce->add_option("--budget", c.budget, "search budget");
  reproduce->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* dot = app.add_subcommand("export-dot", "write a network as Graphviz DOT");
  add_family_flags(dot, c);
  dot->add_option("--net", c.net_path, "network JSON file");
  dot->add_option("-o,--output", c.output, "output path (default stdout)");

  auto* info = app.add_subcommand("field-info", "field parameters, primitive element and subgroup orders");
  info->add_option("--q", c.q, "field size");
  info->add_option("--format", c.format, "json|text")->check(CLI::IsMember({"json", "text"}));
  info->add_option("-o,--output", c.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalid;
  }

  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  json summary;
  int code = kOk;
  try {
    if (command == "construct") code = cmd_construct(c, summary);
    if (command == "analyze") code = cmd_analyze(c, summary);
    if (command == "scan") code = cmd_scan(c, summary);
    if (command == "reproduce") code = cmd_reproduce(c, summary);
    if (command == "export-dot") code = cmd_export_dot(c, summary);
    if (command == "field-info") code = cmd_field_info(c, summary);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    code = e.code() == Errc::CombinatorialBudgetExceeded ? kCapExceeded : kInvalid;
    summary = {{"error", e.what()}};
  } catch (const std::bad_optional_access&) {
    std::cerr << "error: the network carries no family block\n";
    code = kInvalid;
  }
  append_log(c.run_log, command, args, code, summary);
  return code;
}
