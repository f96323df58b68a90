#include <doctest.h>

#include <algorithm>
#include <set>

#include "netfield/constructors.hpp"
#include "netfield/error.hpp"
#include "netfield/serialize.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace netfield;

namespace {

void check_shape(const Network& net) {
  for (const auto& e : net.edges()) {
    REQUIRE(net.node(e.tail).layer);
    REQUIRE(net.node(e.head).layer);
    CHECK(*net.node(e.head).layer == *net.node(e.tail).layer + 1);
  }
  for (auto t : net.receivers()) CHECK(oracle::maxflow(net, {t}) == net.omega());
}

}  // namespace

TEST_CASE("receiver counts match the reference maxflow") {
  const auto a = fig2a_network();
  CHECK(a.nodes_in_layer(4).size() == 9);
  CHECK(a.receivers().size() == 81);
  CHECK(oracle::count_valid(a, a.nodes_in_layer(4), 3) == 81);
  check_shape(a);

  const auto b = fig2b_network();
  CHECK(b.nodes_in_layer(4).size() == 20);
  CHECK(b.receivers().size() == 1000);
  CHECK(oracle::count_valid(b, b.nodes_in_layer(4), 3) == 1000);

  const auto s6 = swirl_network(6);
  CHECK(s6.omega() == 6);
  CHECK(s6.receivers().size() == 666);
  CHECK(oracle::count_valid(s6, s6.nodes_in_layer(4), 6) == 666);
  check_shape(s6);
}

TEST_CASE("general network wiring") {
  const auto net = general_network({4, 2, 3});
  const auto u = net.nodes_in_layer(2);
  const auto v = net.nodes_in_layer(3);
  REQUIRE(u.size() == 4);
  REQUIRE(v.size() == 4);
  auto parents = [&](NodeId x) {
    std::vector<NodeId> out;
    for (auto e : net.in_edges(x)) out.push_back(net.edge(e).tail);
    return out;
  };
  CHECK(parents(v[0]) == std::vector<NodeId>{u[0], u[1]});
  CHECK(parents(v[2]) == std::vector<NodeId>{u[2], u[3]});
  CHECK(parents(v[3]) == std::vector<NodeId>{u[0], u[3]});
  CHECK(net.out_edges(v[3]).size() == 3);
  CHECK(net.out_edges(v[0]).size() == 2);
  CHECK(net.edge(layer4_edge(net, 4, 3)).tail == v[3]);
  CHECK(errc_of([&] { layer4_edge(net, 1, 3); }) == Errc::InvalidParam);
  check_shape(net);
  CHECK(errc_of([] { general_network({1, 2, 2}); }) == Errc::InvalidParam);
  CHECK(errc_of([] { general_network({3, 0, 2}); }) == Errc::InvalidParam);
  CHECK(errc_of([] { general_network({3, 40, 40}, 1000); }) == Errc::CombinatorialBudgetExceeded);
}

TEST_CASE("swirl of dimension 3 is the (3, 2, 2) network") {
  const auto s = swirl_network(3);
  const auto g = general_network({3, 2, 2});
  CHECK(s.node_count() == g.node_count());
  REQUIRE(s.edge_count() == g.edge_count());
  for (std::size_t i = 0; i < s.edge_count(); ++i) {
    CHECK(s.edges()[i].tail == g.edges()[i].tail);
    CHECK(s.edges()[i].head == g.edges()[i].head);
  }
  CHECK(s.family()["name"] == "swirl");
  CHECK(errc_of([] { swirl_network(2); }) == Errc::InvalidParam);
}

TEST_CASE("lower-bound network") {
  for (int m = 2; m <= 5; ++m) {
    const auto net = lower_bound_network(m);
    CAPTURE(m);
    CHECK(net.receivers().size() == static_cast<std::size_t>(4 * m * m + m + 7));
    CHECK(net.nodes_in_layer(4).size() == static_cast<std::size_t>(2 * m + 3));
    std::set<std::vector<NodeId>> distinct;
    for (auto t : net.receivers()) {
      std::vector<NodeId> parents;
      for (auto e : net.in_edges(t)) parents.push_back(net.edge(e).tail);
      CHECK(oracle::maxflow(net, parents) == 3);
      std::sort(parents.begin(), parents.end());
      distinct.insert(parents);
    }
    CHECK(distinct.size() == net.receivers().size());
    check_shape(net);
  }
  CHECK(lower_bound_network(3).receivers().size() == 46);
  CHECK(errc_of([] { lower_bound_network(1); }) == Errc::InvalidParam);
}

TEST_CASE("combination network") {
  CHECK(combination_network(4, 2).receivers().size() == 6);
  CHECK(combination_network(3, 3).receivers().size() == 1);
  const auto net = combination_network(5, 3);
  CHECK(net.receivers().size() == 10);
  CHECK(net.omega() == 3);
  check_shape(net);
  CHECK(errc_of([] { combination_network(2, 3); }) == Errc::InvalidParam);
}

TEST_CASE("construction is deterministic") {
  for (const FamilyTag& tag : {FamilyTag{Fig2aFamily{}}, FamilyTag{SwirlFamily{4}}, FamilyTag{LowerBoundFamily{3}},
                               FamilyTag{CombinationFamily{4, 2}}, FamilyTag{GeneralParams{3, 2, 4}}}) {
    CHECK(network_to_json(build_family(tag)).dump() == network_to_json(build_family(tag)).dump());
    CHECK(family_name(family_from_json(family_to_json(tag))) == family_name(tag));
  }
}

TEST_CASE("condition params") {
  CHECK(condition_params(Fig2aFamily{}) == GeneralParams{3, 3, 3});
  CHECK(condition_params(Fig2bFamily{}) == GeneralParams{3, 5, 10});
  CHECK(condition_params(SwirlFamily{7}) == GeneralParams{7, 2, 2});
  CHECK(condition_params(LowerBoundFamily{4}) == GeneralParams{3, 4, 3});
  CHECK_FALSE(condition_params(CombinationFamily{4, 2}));
}

TEST_CASE("expand_dimension") {
  const auto net = fig2a_network();
  const auto big = expand_dimension(net, 5);
  CHECK(big.omega() == 5);
  CHECK(big.receivers().size() == net.receivers().size());
  CHECK(big.family()["expanded_omega"] == 5);
  for (auto t : big.receivers()) CHECK(oracle::maxflow(big, {t}) == 5);
  CHECK(errc_of([&] { expand_dimension(net, 2); }) == Errc::InvalidParam);
  CHECK(expand_dimension(net, 3).edge_count() == net.edge_count());
}
