#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace netfield {

using NodeId = int;
using EdgeId = int;

enum class NodeRole { Source, Intermediate, Receiver };

struct Node {
  NodeId id = 0;
  NodeRole role = NodeRole::Intermediate;
  std::optional<int> layer;
  std::string label;
};

struct Edge {
  EdgeId id = 0;
  NodeId tail = 0;
  NodeId head = 0;
};

/// Immutable acyclic multigraph with a unique source whose out-degree is the
/// source dimension omega. Build through NetworkBuilder.
class Network {
 public:
  int omega() const noexcept { return omega_; }
  NodeId source() const noexcept { return source_; }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Node& node(NodeId v) const { return nodes_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  /// Incoming / outgoing edge ids of v, ascending.
  const std::vector<EdgeId>& in_edges(NodeId v) const { return in_.at(static_cast<std::size_t>(v)); }
  const std::vector<EdgeId>& out_edges(NodeId v) const { return out_.at(static_cast<std::size_t>(v)); }

  const std::vector<NodeId>& receivers() const noexcept { return receivers_; }
  std::vector<NodeId> nodes_in_layer(int layer) const;

  /// Free-form family description carried through serialization.
  const nlohmann::json& family() const noexcept { return family_; }

 private:
  friend class NetworkBuilder;

  int omega_ = 0;
  NodeId source_ = 0;
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<NodeId> receivers_;
  nlohmann::json family_;
};

class NetworkBuilder {
 public:
  NodeId add_node(NodeRole role, std::optional<int> layer, std::string label);
  EdgeId add_edge(NodeId tail, NodeId head);
  void set_family(nlohmann::json family) { family_ = std::move(family); }

  std::size_t node_count() const noexcept { return nodes_.size(); }

  /// Validates the graph: acyclic, exactly one source, and (when
  /// check_receivers is set) maxflow omega into every receiver.
  Network build(bool check_receivers = true) const;

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  nlohmann::json family_;
};

/// Maximum number of edge-disjoint paths from the source ending at nodes of
/// `targets`; node v may absorb up to |In(v)| paths. Targets must be
/// non-empty and must not include the source.
int maxflow(const Network& net, const std::vector<NodeId>& targets);

/// Kahn's algorithm with smallest-id tie-breaking. Throws Error(CycleDetected).
std::vector<NodeId> topo_order(const Network& net);

inline constexpr std::uint64_t kDefaultSubsetCap = 10'000'000;

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// All k-subsets of `candidates` (as sorted id lists, lexicographic) whose
/// maxflow equals k. Throws Error(CombinatorialBudgetExceeded) when
/// C(|candidates|, k) exceeds `cap`.
std::vector<std::vector<NodeId>> enumerate_valid_sets(const Network& net,
                                                      std::vector<NodeId> candidates, int k,
                                                      std::uint64_t cap = kDefaultSubsetCap);

std::string_view role_name(NodeRole role);

}  // namespace netfield
