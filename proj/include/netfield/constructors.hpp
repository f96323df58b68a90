#pragma once

#include <optional>
#include <string>
#include <variant>

#include "netfield/netgraph.hpp"

namespace netfield {

/// (omega, d1, d2): d1 layer-4 children under each of v_1..v_{omega-1},
/// d2 under v_omega.
struct GeneralParams {
  int omega = 3;
  int d1 = 1;
  int d2 = 1;

  void validate() const;
  bool operator==(const GeneralParams&) const = default;
};

struct SwirlFamily {
  int omega = 3;
};
struct Fig2aFamily {};
struct Fig2bFamily {};
struct LowerBoundFamily {
  int m = 2;
};
struct CombinationFamily {
  int n = 4;
  int omega = 2;
};

using FamilyTag =
    std::variant<GeneralParams, SwirlFamily, Fig2aFamily, Fig2bFamily, LowerBoundFamily, CombinationFamily>;

/// "general", "swirl", "fig2a", "fig2b", "lowerbound" or "combination".
std::string family_name(const FamilyTag& tag);
nlohmann::json family_to_json(const FamilyTag& tag);
FamilyTag family_from_json(const nlohmann::json& j);

/// Parameters of the reduced product-set condition for a family, if it has
/// one. The lower-bound family maps to (3, m, 3).
std::optional<GeneralParams> condition_params(const FamilyTag& tag);

/// Five-layer network: s; u_1..u_omega; v_1..v_omega where v_i is fed by
/// u_i and u_{i+1} (v_omega by u_1 and u_omega); layer-4 children n_{i,j}
/// with the single in-edge e_{ij}; one receiver per omega-set of layer-4
/// nodes with full maxflow. Ids follow construction order.
Network general_network(const GeneralParams& params, std::uint64_t cap = kDefaultSubsetCap);
Network swirl_network(int omega, std::uint64_t cap = kDefaultSubsetCap);
Network fig2a_network();
Network fig2b_network();

/// Omega = 3 network with grey sets N1 (m nodes under v_1), N2 (m nodes
/// under v_2), N3 (3 nodes under v_3) and the 4m^2 + m + 7 receivers of
/// types I-IV.
Network lower_bound_network(int m);

/// Source with omega parallel edges into a hub, n relays fed by the hub,
/// and one receiver per omega-subset of relays.
Network combination_network(int n, int omega);

Network build_family(const FamilyTag& tag, std::uint64_t cap = kDefaultSubsetCap);

/// Adds new_omega - omega nodes, each fed by the source and feeding every
/// receiver.
Network expand_dimension(const Network& net, int new_omega);

/// e_{ij}: in-edge of the j-th layer-4 child of the i-th layer-3 node
/// (both 1-based) of a five-layer family network.
EdgeId layer4_edge(const Network& net, int i, int j);

}  // namespace netfield
