#include <doctest.h>

#include <algorithm>
#include <random>

#include "netfield/constructors.hpp"
#include "netfield/error.hpp"
#include "netfield/netgraph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace netfield;

namespace {

// Random layered DAG: source with `omega` out-edges, then `layers` layers of
// `width` nodes, each fed by 1-3 random nodes from earlier layers.
Network random_dag(std::mt19937_64& rng, int omega, int layers, int width) {
  NetworkBuilder b;
  const NodeId s = b.add_node(NodeRole::Source, 1, "s");
  std::vector<NodeId> earlier{s};
  std::vector<NodeId> first;
  for (int i = 0; i < omega; ++i) {
    first.push_back(b.add_node(NodeRole::Intermediate, 2, "a" + std::to_string(i)));
    b.add_edge(s, first.back());
  }
  std::vector<NodeId> pool = first;
  for (int l = 0; l < layers; ++l) {
    std::vector<NodeId> next;
    for (int w = 0; w < width; ++w) {
      const NodeId v = b.add_node(NodeRole::Intermediate, 3 + l, "b" + std::to_string(l) + "_" + std::to_string(w));
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      const int deg = 1 + static_cast<int>(rng() % 3);
      for (int d = 0; d < deg; ++d) b.add_edge(pool[pick(rng)], v);
      next.push_back(v);
    }
    pool.insert(pool.end(), next.begin(), next.end());
  }
  return b.build(false);
}

std::vector<NodeId> layer4(const Network& net) { return net.nodes_in_layer(4); }

}  // namespace

TEST_CASE("maxflow on the 3-3-3 network") {
  const auto net = fig2a_network();
  const auto g = layer4(net);
  REQUIRE(g.size() == 9);
  CHECK(maxflow(net, {g[0], g[3], g[6]}) == 3);
  CHECK(maxflow(net, {g[0], g[1], g[2]}) == 2);
  CHECK(maxflow(net, {g[0], g[1], g[3]}) == 3);
  CHECK(maxflow(net, {g[0]}) == 1);
  CHECK(errc_of([&] { maxflow(net, {}); }) == Errc::InvalidParam);
  CHECK(errc_of([&] { maxflow(net, {net.source()}); }) == Errc::InvalidParam);
  for (auto t : net.receivers()) CHECK(maxflow(net, {t}) == 3);
}

TEST_CASE("maxflow agrees with the reference on random DAGs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int omega = 1 + trial % 4;
    const auto net = random_dag(rng, omega, 1 + trial % 3, 2 + trial % 4);
    std::vector<NodeId> others;
    for (const auto& n : net.nodes()) {
      if (n.id != net.source()) others.push_back(n.id);
    }
    std::shuffle(others.begin(), others.end(), rng);
    const std::size_t k = 1 + rng() % std::min<std::size_t>(others.size(), 4);
    const std::vector<NodeId> targets(others.begin(), others.begin() + static_cast<long>(k));
    CAPTURE(trial);
    const int got = maxflow(net, targets);
    CHECK(got == oracle::maxflow(net, targets));
    CHECK(got <= omega);
    // adding a target never lowers the flow
    if (k < others.size()) {
      auto bigger = targets;
      bigger.push_back(others[k]);
      CHECK(maxflow(net, bigger) >= got);
    }
  }
}

TEST_CASE("enumerate_valid_sets") {
  const auto net = fig2a_network();
  const auto g = layer4(net);
  const auto sets = enumerate_valid_sets(net, g, 3);
  CHECK(sets.size() == 81);
  CHECK(std::is_sorted(sets.begin(), sets.end()));
  CHECK(std::find(sets.begin(), sets.end(), std::vector<NodeId>{g[0], g[1], g[3]}) != sets.end());
  CHECK(std::find(sets.begin(), sets.end(), std::vector<NodeId>{g[0], g[1], g[2]}) == sets.end());
  CHECK(sets.size() == oracle::count_valid(net, g, 3));
  CHECK(errc_of([&] { enumerate_valid_sets(net, g, 3, 83); }) == Errc::CombinatorialBudgetExceeded);
  CHECK(enumerate_valid_sets(net, g, 3, 84).size() == 81);
}

TEST_CASE("binomial") {
  CHECK(binomial(9, 3) == 84);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(200, 100) == UINT64_MAX);
}

TEST_CASE("topo_order") {
  NetworkBuilder b;
  const NodeId s = b.add_node(NodeRole::Source, std::nullopt, "s");
  const NodeId c = b.add_node(NodeRole::Intermediate, std::nullopt, "c");
  const NodeId a = b.add_node(NodeRole::Intermediate, std::nullopt, "a");
  const NodeId d = b.add_node(NodeRole::Intermediate, std::nullopt, "b");
  b.add_edge(s, a);
  b.add_edge(s, d);
  b.add_edge(a, c);
  b.add_edge(d, c);
  const auto net = b.build(false);
  CHECK(topo_order(net) == std::vector<NodeId>{s, a, d, c});

  const auto f = fig2a_network();
  const auto order = topo_order(f);
  CHECK(order.size() == f.node_count());
  std::vector<std::size_t> pos(f.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = i;
  for (const auto& e : f.edges()) CHECK(pos[static_cast<std::size_t>(e.tail)] < pos[static_cast<std::size_t>(e.head)]);
}

TEST_CASE("build validation") {
  {
    NetworkBuilder b;
    const NodeId s = b.add_node(NodeRole::Source, 1, "s");
    const NodeId x = b.add_node(NodeRole::Intermediate, 2, "x");
    const NodeId y = b.add_node(NodeRole::Intermediate, 2, "y");
    b.add_edge(s, x);
    b.add_edge(x, y);
    b.add_edge(y, x);
    CHECK(errc_of([&] { b.build(false); }) == Errc::CycleDetected);
  }
  {
    NetworkBuilder b;
    b.add_node(NodeRole::Source, 1, "s");
    b.add_node(NodeRole::Source, 1, "s2");
    CHECK(errc_of([&] { b.build(false); }).has_value());
  }
  {
    // receiver reachable by only one path while omega is 2
    NetworkBuilder b;
    const NodeId s = b.add_node(NodeRole::Source, 1, "s");
    const NodeId x = b.add_node(NodeRole::Intermediate, 2, "x");
    const NodeId y = b.add_node(NodeRole::Intermediate, 2, "y");
    const NodeId t = b.add_node(NodeRole::Receiver, 3, "t");
    b.add_edge(s, x);
    b.add_edge(s, y);
    b.add_edge(x, t);
    CHECK(errc_of([&] { b.build(true); }).has_value());
    CHECK_FALSE(errc_of([&] { b.build(false); }).has_value());
    b.add_edge(y, t);
    const auto net = b.build(true);
    CHECK(net.omega() == 2);
    CHECK(net.receivers() == std::vector<NodeId>{t});
    CHECK(net.in_edges(t) == std::vector<EdgeId>{2, 3});
  }
}
