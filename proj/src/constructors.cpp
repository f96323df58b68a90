#include "netfield/constructors.hpp"

#include "netfield/error.hpp"

namespace netfield {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Skeleton {
  NetworkBuilder builder;
  std::vector<NodeId> layer4;
};

// Layers 1-4 with `fans[i]` layer-4 children under v_{i+1}.
Skeleton build_skeleton(int omega, const std::vector<int>& fans,
                        const std::vector<std::string>& child_labels) {
  Skeleton sk;
  auto& b = sk.builder;
  const NodeId s = b.add_node(NodeRole::Source, 1, "s");
  std::vector<NodeId> u, v;
  for (int i = 1; i <= omega; ++i) {
    u.push_back(b.add_node(NodeRole::Intermediate, 2, "u" + std::to_string(i)));
    b.add_edge(s, u.back());
  }
  for (int i = 1; i <= omega; ++i) {
    v.push_back(b.add_node(NodeRole::Intermediate, 3, "v" + std::to_string(i)));
    if (i < omega) {
      b.add_edge(u[static_cast<std::size_t>(i - 1)], v.back());
      b.add_edge(u[static_cast<std::size_t>(i)], v.back());
    } else {
      b.add_edge(u.front(), v.back());
      b.add_edge(u.back(), v.back());
    }
  }
  std::size_t label = 0;
  for (int i = 0; i < omega; ++i) {
    for (int j = 0; j < fans[static_cast<std::size_t>(i)]; ++j) {
      const NodeId n = b.add_node(NodeRole::Intermediate, 4, child_labels[label++]);
      b.add_edge(v[static_cast<std::size_t>(i)], n);
      sk.layer4.push_back(n);
    }
  }
  return sk;
}

void add_receivers(NetworkBuilder& b, const std::vector<std::vector<NodeId>>& parent_sets) {
  int k = 1;
  for (const auto& parents : parent_sets) {
    const NodeId t = b.add_node(NodeRole::Receiver, 5, "t" + std::to_string(k++));
    for (auto p : parents) b.add_edge(p, t);
  }
}

}  // namespace

void GeneralParams::validate() const {
  if (omega < 2) throw Error(Errc::InvalidParam, "omega must be >= 2");
  if (d1 < 1 || d2 < 1) throw Error(Errc::InvalidParam, "d1 and d2 must be >= 1");
}

std::string family_name(const FamilyTag& tag) {
  return std::visit(overloaded{
                        [](const GeneralParams&) { return std::string("general"); },
                        [](const SwirlFamily&) { return std::string("swirl"); },
                        [](const Fig2aFamily&) { return std::string("fig2a"); },
                        [](const Fig2bFamily&) { return std::string("fig2b"); },
                        [](const LowerBoundFamily&) { return std::string("lowerbound"); },
                        [](const CombinationFamily&) { return std::string("combination"); },
                    },
                    tag);
}

nlohmann::json family_to_json(const FamilyTag& tag) {
  nlohmann::json j = {{"name", family_name(tag)}};
  std::visit(overloaded{
                 [&](const GeneralParams& p) {
                   j["omega"] = p.omega;
                   j["d1"] = p.d1;
                   j["d2"] = p.d2;
                 },
                 [&](const SwirlFamily& f) { j["omega"] = f.omega; },
                 [](const Fig2aFamily&) {},
                 [](const Fig2bFamily&) {},
                 [&](const LowerBoundFamily& f) { j["m"] = f.m; },
                 [&](const CombinationFamily& f) {
                   j["n"] = f.n;
                   j["omega"] = f.omega;
                 },
             },
             tag);
  return j;
}

FamilyTag family_from_json(const nlohmann::json& j) {
  try {
    const auto name = j.at("name").get<std::string>();
    if (name == "general") return GeneralParams{j.at("omega").get<int>(), j.at("d1").get<int>(), j.at("d2").get<int>()};
    if (name == "swirl") return SwirlFamily{j.at("omega").get<int>()};
    if (name == "fig2a") return Fig2aFamily{};
    if (name == "fig2b") return Fig2bFamily{};
    if (name == "lowerbound") return LowerBoundFamily{j.at("m").get<int>()};
    if (name == "combination") return CombinationFamily{j.at("n").get<int>(), j.at("omega").get<int>()};
    throw Error(Errc::ParseError, "unknown family '" + name + "'");
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::optional<GeneralParams> condition_params(const FamilyTag& tag) {
  return std::visit(overloaded{
                        [](const GeneralParams& p) -> std::optional<GeneralParams> { return p; },
                        [](const SwirlFamily& f) -> std::optional<GeneralParams> {
                          return GeneralParams{f.omega, 2, 2};
                        },
                        [](const Fig2aFamily&) -> std::optional<GeneralParams> {
                          return GeneralParams{3, 3, 3};
                        },
                        [](const Fig2bFamily&) -> std::optional<GeneralParams> {
                          return GeneralParams{3, 5, 10};
                        },
                        [](const LowerBoundFamily& f) -> std::optional<GeneralParams> {
                          return GeneralParams{3, f.m, 3};
                        },
                        [](const CombinationFamily&) -> std::optional<GeneralParams> {
                          return std::nullopt;
                        },
                    },
                    tag);
}

Network general_network(const GeneralParams& params, std::uint64_t cap) {
  params.validate();
  std::vector<int> fans(static_cast<std::size_t>(params.omega), params.d1);
  fans.back() = params.d2;
  std::vector<std::string> labels;
  for (int i = 1; i <= params.omega; ++i) {
    for (int j = 1; j <= fans[static_cast<std::size_t>(i - 1)]; ++j) {
      labels.push_back("n" + std::to_string(i) + "," + std::to_string(j));
    }
  }
  auto sk = build_skeleton(params.omega, fans, labels);
  const Network partial = sk.builder.build(false);
  const auto sets = enumerate_valid_sets(partial, sk.layer4, params.omega, cap);
  add_receivers(sk.builder, sets);
  sk.builder.set_family(family_to_json(params));
  return sk.builder.build(false);
}

Network swirl_network(int omega, std::uint64_t cap) {
  if (omega < 3) throw Error(Errc::InvalidParam, "swirl network needs omega >= 3");
  auto net = general_network({omega, 2, 2}, cap);
  NetworkBuilder b;
  for (const auto& n : net.nodes()) b.add_node(n.role, n.layer, n.label);
  for (const auto& e : net.edges()) b.add_edge(e.tail, e.head);
  b.set_family(family_to_json(SwirlFamily{omega}));
  return b.build(false);
}

Network fig2a_network() {
  auto net = general_network({3, 3, 3});
  NetworkBuilder b;
  for (const auto& n : net.nodes()) b.add_node(n.role, n.layer, n.label);
  for (const auto& e : net.edges()) b.add_edge(e.tail, e.head);
  b.set_family(family_to_json(Fig2aFamily{}));
  return b.build(false);
}

Network fig2b_network() {
  auto net = general_network({3, 5, 10});
  NetworkBuilder b;
  for (const auto& n : net.nodes()) b.add_node(n.role, n.layer, n.label);
  for (const auto& e : net.edges()) b.add_edge(e.tail, e.head);
  b.set_family(family_to_json(Fig2bFamily{}));
  return b.build(false);
}

Network lower_bound_network(int m) {
  if (m < 2) throw Error(Errc::InvalidParam, "lower-bound network needs m >= 2");
  std::vector<std::string> labels;
  for (int i = 1; i <= 2 * m + 3; ++i) labels.push_back("n" + std::to_string(i));
  auto sk = build_skeleton(3, {m, m, 3}, labels);
  // grey(i) is n_i, 1-based
  auto grey = [&](int i) { return sk.layer4[static_cast<std::size_t>(i - 1)]; };

  std::vector<std::vector<NodeId>> sets;
  for (int i = 1; i <= m; ++i) {  // type I
    for (int j = i + 1; j <= m; ++j) {
      const int k = i == 1 ? 1 : j;
      sets.push_back({grey(i), grey(j), grey(m + k)});
    }
  }
  for (int i = 1; i <= m; ++i) {  // type II
    for (int j = i + 1; j <= m; ++j) {
      const int k = i == 1 ? 1 : j;
      sets.push_back({grey(k), grey(m + i), grey(m + j)});
    }
  }
  for (int i = 1; i <= m; ++i) sets.push_back({grey(i), grey(2 * m + 1), grey(2 * m + 2)});  // type III
  for (int i = 1; i <= m; ++i) sets.push_back({grey(m + i), grey(2 * m + 1), grey(2 * m + 3)});
  sets.push_back({grey(1), grey(2 * m + 2), grey(2 * m + 3)});
  for (int i = 1; i <= 3; ++i) sets.push_back({grey(1), grey(2), grey(2 * m + i)});
  for (int i = 1; i <= 3; ++i) sets.push_back({grey(m + 1), grey(m + 2), grey(2 * m + i)});
  for (int i = 1; i <= m; ++i) {  // type IV
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= 3; ++k) sets.push_back({grey(i), grey(m + j), grey(2 * m + k)});
    }
  }
  add_receivers(sk.builder, sets);
  sk.builder.set_family(family_to_json(LowerBoundFamily{m}));
  return sk.builder.build(false);
}

Network combination_network(int n, int omega) {
  if (omega < 1 || n < omega) throw Error(Errc::InvalidParam, "combination network needs n >= omega >= 1");
  if (binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(omega)) > kDefaultSubsetCap) {
    throw Error(Errc::CombinatorialBudgetExceeded, "too many receivers");
  }
  NetworkBuilder b;
  const NodeId s = b.add_node(NodeRole::Source, 1, "s");
  const NodeId hub = b.add_node(NodeRole::Intermediate, 2, "h");
  for (int i = 0; i < omega; ++i) b.add_edge(s, hub);
  std::vector<NodeId> relays;
  for (int i = 1; i <= n; ++i) {
    relays.push_back(b.add_node(NodeRole::Intermediate, 3, "r" + std::to_string(i)));
    b.add_edge(hub, relays.back());
  }
  std::vector<int> idx(static_cast<std::size_t>(omega));
  for (int i = 0; i < omega; ++i) idx[static_cast<std::size_t>(i)] = i;
  int k = 1;
  for (;;) {
    const NodeId t = b.add_node(NodeRole::Receiver, 4, "t" + std::to_string(k++));
    for (int i : idx) b.add_edge(relays[static_cast<std::size_t>(i)], t);
    int i = omega;
    while (i > 0 && idx[static_cast<std::size_t>(i - 1)] == n - omega + i - 1) --i;
    if (i == 0) break;
    ++idx[static_cast<std::size_t>(i - 1)];
    for (int j = i; j < omega; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  b.set_family(family_to_json(CombinationFamily{n, omega}));
  return b.build(false);
}

Network build_family(const FamilyTag& tag, std::uint64_t cap) {
  return std::visit(overloaded{
                        [&](const GeneralParams& p) { return general_network(p, cap); },
                        [&](const SwirlFamily& f) { return swirl_network(f.omega, cap); },
                        [](const Fig2aFamily&) { return fig2a_network(); },
                        [](const Fig2bFamily&) { return fig2b_network(); },
                        [](const LowerBoundFamily& f) { return lower_bound_network(f.m); },
                        [](const CombinationFamily& f) { return combination_network(f.n, f.omega); },
                    },
                    tag);
}

Network expand_dimension(const Network& net, int new_omega) {
  if (new_omega < net.omega()) throw Error(Errc::InvalidParam, "cannot shrink omega");
  NetworkBuilder b;
  for (const auto& n : net.nodes()) b.add_node(n.role, n.layer, n.label);
  for (const auto& e : net.edges()) b.add_edge(e.tail, e.head);
  for (int k = 1; k <= new_omega - net.omega(); ++k) {
    const NodeId x = b.add_node(NodeRole::Intermediate, 2, "x" + std::to_string(k));
    b.add_edge(net.source(), x);
    for (auto t : net.receivers()) b.add_edge(x, t);
  }
  auto family = net.family();
  family["expanded_omega"] = new_omega;
  b.set_family(std::move(family));
  return b.build(true);
}

EdgeId layer4_edge(const Network& net, int i, int j) {
  const auto layer3 = net.nodes_in_layer(3);
  if (i < 1 || static_cast<std::size_t>(i) > layer3.size()) throw Error(Errc::InvalidParam, "no such layer-3 node");
  const auto& out = net.out_edges(layer3[static_cast<std::size_t>(i - 1)]);
  if (j < 1 || static_cast<std::size_t>(j) > out.size()) throw Error(Errc::InvalidParam, "no such layer-4 child");
  return out[static_cast<std::size_t>(j - 1)];
}

}  // namespace netfield
