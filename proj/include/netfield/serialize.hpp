#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "netfield/constructors.hpp"
#include "netfield/gf.hpp"
#include "netfield/lnc.hpp"
#include "netfield/netgraph.hpp"
#include "netfield/solver.hpp"

namespace netfield {

/// {"omega", "nodes": [{"id", "role", "layer", "label"}], "edges": [{"id", "tail", "head"}], "family"}
nlohmann::json network_to_json(const Network& net);
/// Rebuilds and revalidates the graph (ids must be 0..n-1 in order).
/// Throws Error(ParseError) on malformed input.
Network network_from_json(const nlohmann::json& j);

/// {"p", "m", "q", "modulus"} with the modulus as its integer encoding.
nlohmann::json field_to_json(const FieldSpec& field);

/// {"q", "alphas", "deltas"}
nlohmann::json assignment_to_json(const FieldSpec& field, const Assignment& a);
Assignment assignment_from_json(const nlohmann::json& j);

/// {"q", "coefficients": [{"in", "out", "value"}]} listing the free pairs.
nlohmann::json code_to_json(const Network& net, const LinearCode& code);
LinearCode code_from_json(const Network& net, const nlohmann::json& j);

/// {"status", "method", "proof", "witness", "explored"}; `explored` is
/// omitted when `with_counts` is false.
nlohmann::json verdict_to_json(const FieldSpec& field, const Network* net, const Verdict& v,
                               bool with_counts = true);

/// {"family", "verdicts": [{"q", "status", "witness", "method", "elapsed_ms"}], "q_min", "exceptional_q"}.
/// With `deterministic`, elapsed_ms is written as 0.
nlohmann::json scan_to_json(const ScanResult& r, bool deterministic = false);

/// Graphviz digraph, one rank per layer, receivers as double circles and
/// layer-4 nodes filled grey.
std::string to_dot(const Network& net);

/// Witness matrix for an assignment, rendered row by row.
std::string witness_matrix(const FieldSpec& field, const GeneralParams& params, const Assignment& a);

}  // namespace netfield
