#include "netfield/serialize.hpp"

#include <map>
#include <sstream>

#include "netfield/error.hpp"

namespace netfield {

namespace {

NodeRole parse_role(const std::string& s) {
  if (s == "source") return NodeRole::Source;
  if (s == "intermediate") return NodeRole::Intermediate;
  if (s == "receiver") return NodeRole::Receiver;
  throw Error(Errc::ParseError, "unknown node role '" + s + "'");
}

template <class F>
auto parsing(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

nlohmann::json network_to_json(const Network& net) {
  nlohmann::json nodes = nlohmann::json::array();
  for (const auto& n : net.nodes()) {
    nodes.push_back({{"id", n.id},
                     {"role", role_name(n.role)},
                     {"layer", n.layer ? nlohmann::json(*n.layer) : nlohmann::json(nullptr)},
                     {"label", n.label}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : net.edges()) edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  nlohmann::json j = {{"omega", net.omega()}, {"nodes", nodes}, {"edges", edges}};
  if (!net.family().is_null()) j["family"] = net.family();
  return j;
}

Network network_from_json(const nlohmann::json& j) {
  return parsing([&] {
    NetworkBuilder b;
    for (const auto& n : j.at("nodes")) {
      const auto id = n.at("id").get<int>();
      if (id != static_cast<int>(b.node_count())) throw Error(Errc::ParseError, "node ids must be 0..n-1 in order");
      std::optional<int> layer;
      if (n.contains("layer") && !n.at("layer").is_null()) layer = n.at("layer").get<int>();
      b.add_node(parse_role(n.at("role").get<std::string>()), layer, n.value("label", std::string{}));
    }
    int expected = 0;
    for (const auto& e : j.at("edges")) {
      if (e.at("id").get<int>() != expected++) throw Error(Errc::ParseError, "edge ids must be 0..m-1 in order");
      const auto tail = e.at("tail").get<int>();
      const auto head = e.at("head").get<int>();
      const auto n = static_cast<int>(b.node_count());
      if (tail < 0 || tail >= n || head < 0 || head >= n) throw Error(Errc::ParseError, "edge endpoint out of range");
      b.add_edge(tail, head);
    }
    if (j.contains("family")) b.set_family(j.at("family"));
    auto net = b.build(true);
    if (j.contains("omega") && j.at("omega").get<int>() != net.omega()) {
      throw Error(Errc::ParseError, "omega does not match the source out-degree");
    }
    return net;
  });
}

nlohmann::json field_to_json(const FieldSpec& field) {
  return {{"p", field.p()}, {"m", field.m()}, {"q", field.q()}, {"modulus", field.modulus_encoding()}};
}

nlohmann::json assignment_to_json(const FieldSpec& field, const Assignment& a) {
  return {{"q", field.q()}, {"alphas", a.alphas}, {"deltas", a.deltas}};
}

Assignment assignment_from_json(const nlohmann::json& j) {
  return parsing([&] {
    return Assignment{j.at("alphas").get<std::vector<std::vector<Elem>>>(), j.at("deltas").get<std::vector<Elem>>()};
  });
}

nlohmann::json code_to_json(const Network& net, const LinearCode& code) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& pair : indeterminates(net)) {
    const auto k = code.get(pair);
    coeffs.push_back({{"in", pair.in}, {"out", pair.out}, {"value", k ? nlohmann::json(*k) : nlohmann::json(nullptr)}});
  }
  return {{"q", code.field()->q()}, {"coefficients", coeffs}};
}

LinearCode code_from_json(const Network& net, const nlohmann::json& j) {
  return parsing([&] {
    auto code = LinearCode::with_defaults(net, make_field(j.at("q").get<std::uint64_t>()));
    for (const auto& c : j.at("coefficients")) {
      code.set({c.at("in").get<EdgeId>(), c.at("out").get<EdgeId>()}, c.at("value").get<Elem>());
    }
    return code;
  });
}

nlohmann::json verdict_to_json(const FieldSpec& field, const Network* net, const Verdict& v, bool with_counts) {
  nlohmann::json witness = nullptr;
  if (v.assignment) {
    witness = assignment_to_json(field, *v.assignment);
  } else if (v.code && net) {
    witness = code_to_json(*net, *v.code);
  }
  nlohmann::json j = {{"status", status_name(v.status)}, {"method", v.method}, {"proof", v.proof}, {"witness", witness}};
  if (with_counts) j["explored"] = v.explored;
  return j;
}

nlohmann::json scan_to_json(const ScanResult& r, bool deterministic) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& e : r.verdicts) {
    nlohmann::json witness = nullptr;
    if (e.verdict && e.verdict->assignment) witness = assignment_to_json(*make_field(e.q), *e.verdict->assignment);
    if (e.verdict && !e.verdict->assignment && e.verdict->code) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (const auto& [pair, value] : e.verdict->code->coefficients()) {
        coeffs.push_back({{"in", pair.in}, {"out", pair.out}, {"value", value}});
      }
      witness = {{"q", e.q}, {"coefficients", coeffs}};
    }
    verdicts.push_back({{"q", e.q},
                        {"status", e.status()},
                        {"witness", witness},
                        {"method", e.method},
                        {"elapsed_ms", deterministic ? 0 : e.elapsed_ms}});
  }
  return {{"family", family_to_json(r.family)},
          {"verdicts", verdicts},
          {"q_min", r.q_min ? nlohmann::json(*r.q_min) : nlohmann::json(nullptr)},
          {"exceptional_q", r.exceptional_q}};
}

std::string to_dot(const Network& net) {
  std::ostringstream os;
  os << "digraph network {\n  rankdir=TB;\n  node [shape=circle];\n";
  std::map<int, std::vector<NodeId>> layers;
  std::vector<NodeId> unlayered;
  for (const auto& n : net.nodes()) {
    if (n.layer) {
      layers[*n.layer].push_back(n.id);
    } else {
      unlayered.push_back(n.id);
    }
  }
  auto emit = [&](NodeId v) {
    const auto& n = net.node(v);
    os << "    " << v << " [label=\"" << dot_escape(n.label.empty() ? std::to_string(v) : n.label) << '"';
    if (n.role == NodeRole::Receiver) os << ", shape=doublecircle";
    if (n.layer == 4) os << ", style=filled, fillcolor=grey";
    os << "];\n";
  };
  for (const auto& [layer, ids] : layers) {
    os << "  subgraph layer" << layer << " {\n    rank=same;\n";
    for (auto v : ids) emit(v);
    os << "  }\n";
  }
  for (auto v : unlayered) emit(v);
  for (const auto& e : net.edges()) os << "  " << e.tail << " -> " << e.head << " [label=\"e" << e.id << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string witness_matrix(const FieldSpec& field, const GeneralParams& params, const Assignment& a) {
  return format_matrix(field, reduced_matrix(field, params, a));
}

}  // namespace netfield
