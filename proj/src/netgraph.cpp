#include "netfield/netgraph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <queue>

#include "netfield/error.hpp"

namespace netfield {

std::string_view role_name(NodeRole role) {
  switch (role) {
    case NodeRole::Source: return "source";
    case NodeRole::Intermediate: return "intermediate";
    case NodeRole::Receiver: return "receiver";
  }
  return "intermediate";
}

std::vector<NodeId> Network::nodes_in_layer(int layer) const {
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (n.layer == layer) out.push_back(n.id);
  }
  return out;
}

NodeId NetworkBuilder::add_node(NodeRole role, std::optional<int> layer, std::string label) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({id, role, layer, std::move(label)});
  return id;
}

EdgeId NetworkBuilder::add_edge(NodeId tail, NodeId head) {
  const auto n = static_cast<NodeId>(nodes_.size());
  if (tail < 0 || tail >= n || head < 0 || head >= n) {
    throw Error(Errc::InvalidParam, "edge endpoint out of range");
  }
  const auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back({id, tail, head});
  return id;
}

Network NetworkBuilder::build(bool check_receivers) const {
  Network net;
  net.nodes_ = nodes_;
  net.edges_ = edges_;
  net.family_ = family_;
  net.in_.resize(nodes_.size());
  net.out_.resize(nodes_.size());
  for (const auto& e : edges_) {
    net.out_[static_cast<std::size_t>(e.tail)].push_back(e.id);
    net.in_[static_cast<std::size_t>(e.head)].push_back(e.id);
  }
  int sources = 0;
  for (const auto& n : nodes_) {
    if (n.role == NodeRole::Source) {
      ++sources;
      net.source_ = n.id;
    } else if (n.role == NodeRole::Receiver) {
      net.receivers_.push_back(n.id);
    }
  }
  if (sources != 1) throw Error(Errc::InvalidParam, "network needs exactly one source");
  if (!net.in_edges(net.source_).empty()) {
    throw Error(Errc::InvalidParam, "source must not have incoming edges");
  }
  net.omega_ = static_cast<int>(net.out_edges(net.source_).size());
  if (net.omega_ < 1) throw Error(Errc::InvalidParam, "source has no outgoing edges");
  topo_order(net);  // throws on cycles
  if (check_receivers) {
    for (auto t : net.receivers_) {
      if (maxflow(net, {t}) != net.omega_) {
        throw Error(Errc::InvalidParam,
                    "receiver " + std::to_string(t) + " has maxflow below omega");
      }
    }
  }
  return net;
}

int maxflow(const Network& net, const std::vector<NodeId>& targets) {
  if (targets.empty()) throw Error(Errc::InvalidParam, "empty node set");
  const auto n = net.node_count();
  const auto sink = static_cast<NodeId>(n);

  struct Arc {
    NodeId to;
    int cap;
  };
  // arcs 2k / 2k+1 are an arc and its residual twin
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> adj(n + 1);
  auto add_arc = [&](NodeId from, NodeId to, int cap) {
    adj[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap});
    adj[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0});
  };
  for (const auto& e : net.edges()) add_arc(e.tail, e.head, 1);
  std::vector<bool> seen_target(n, false);
  for (auto v : targets) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw Error(Errc::InvalidParam, "node out of range");
    if (v == net.source()) throw Error(Errc::InvalidParam, "node set contains the source");
    if (seen_target[static_cast<std::size_t>(v)]) continue;
    seen_target[static_cast<std::size_t>(v)] = true;
    add_arc(v, sink, static_cast<int>(net.in_edges(v).size()));
  }

  int flow = 0;
  std::vector<int> via(n + 1);
  for (;;) {
    std::fill(via.begin(), via.end(), -1);
    std::deque<NodeId> frontier{net.source()};
    via[static_cast<std::size_t>(net.source())] = -2;
    while (!frontier.empty() && via[static_cast<std::size_t>(sink)] == -1) {
      const NodeId u = frontier.front();
      frontier.pop_front();
      for (int a : adj[static_cast<std::size_t>(u)]) {
        const auto& arc = arcs[static_cast<std::size_t>(a)];
        if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
          via[static_cast<std::size_t>(arc.to)] = a;
          frontier.push_back(arc.to);
        }
      }
    }
    if (via[static_cast<std::size_t>(sink)] == -1) break;
    for (NodeId v = sink; v != net.source();) {
      const int a = via[static_cast<std::size_t>(v)];
      arcs[static_cast<std::size_t>(a)].cap -= 1;
      arcs[static_cast<std::size_t>(a ^ 1)].cap += 1;
      v = arcs[static_cast<std::size_t>(a ^ 1)].to;
    }
    ++flow;
  }
  return flow;
}

std::vector<NodeId> topo_order(const Network& net) {
  const auto n = net.node_count();
  std::vector<std::size_t> indegree(n);
  for (std::size_t v = 0; v < n; ++v) indegree[v] = net.in_edges(static_cast<NodeId>(v)).size();
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.push(static_cast<NodeId>(v));
  }
  std::vector<NodeId> order;
  order.reserve(n);
  while (!ready.empty()) {
    const NodeId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (auto e : net.out_edges(v)) {
      const auto h = static_cast<std::size_t>(net.edge(e).head);
      if (--indegree[h] == 0) ready.push(static_cast<NodeId>(h));
    }
  }
  if (order.size() != n) throw Error(Errc::CycleDetected, "network contains a directed cycle");
  return order;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // saturates at UINT64_MAX
    if (r > UINT64_MAX / (n - k + i)) return UINT64_MAX;
    r = r * (n - k + i) / i;
  }
  return r;
}

std::vector<std::vector<NodeId>> enumerate_valid_sets(const Network& net,
                                                      std::vector<NodeId> candidates, int k,
                                                      std::uint64_t cap) {
  std::sort(candidates.begin(), candidates.end());
  if (std::adjacent_find(candidates.begin(), candidates.end()) != candidates.end()) {
    throw Error(Errc::InvalidParam, "duplicate candidates");
  }
  const auto size = candidates.size();
  if (k < 1 || static_cast<std::size_t>(k) > size) {
    throw Error(Errc::InvalidParam, "subset size out of range");
  }
  const auto total = binomial(size, static_cast<std::uint64_t>(k));
  if (total > cap) {
    throw Error(Errc::CombinatorialBudgetExceeded,
                "C(" + std::to_string(size) + ", " + std::to_string(k) + ") = " +
                    std::to_string(total) + " subsets exceed the cap of " + std::to_string(cap));
  }
  std::vector<std::vector<NodeId>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<NodeId> subset(idx.size());
  for (;;) {
    for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = candidates[idx[i]];
    if (maxflow(net, subset) == k) out.push_back(subset);
    // next combination
    std::size_t i = idx.size();
    while (i > 0 && idx[i - 1] == size - idx.size() + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < idx.size(); ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace netfield
