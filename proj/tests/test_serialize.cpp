#include <doctest.h>

#include "netfield/constructors.hpp"
#include "netfield/error.hpp"
#include "netfield/presets.hpp"
#include "netfield/serialize.hpp"
#include "support.hpp"

using namespace netfield;

TEST_CASE("network round trip") {
  for (const auto& net : {fig2a_network(), lower_bound_network(2), combination_network(4, 2),
                          expand_dimension(swirl_network(3), 4)}) {
    const auto j = network_to_json(net);
    const auto back = network_from_json(nlohmann::json::parse(j.dump()));
    CHECK(network_to_json(back) == j);
    CHECK(back.omega() == net.omega());
    CHECK(back.receivers() == net.receivers());
  }
}

TEST_CASE("network parse errors") {
  CHECK(errc_of([] { network_from_json(nlohmann::json::object()); }) == Errc::ParseError);
  CHECK(errc_of([] { network_from_json(nlohmann::json::array()); }) == Errc::ParseError);
  auto j = network_to_json(fig2a_network());
  auto shuffled = j;
  std::swap(shuffled["nodes"][0], shuffled["nodes"][1]);
  CHECK(errc_of([&] { network_from_json(shuffled); }) == Errc::ParseError);
  auto bad_role = j;
  bad_role["nodes"][0]["role"] = "sink";
  CHECK(errc_of([&] { network_from_json(bad_role); }) == Errc::ParseError);
  auto bad_edge = j;
  bad_edge["edges"][0]["head"] = 9999;
  CHECK(errc_of([&] { network_from_json(bad_edge); }).has_value());
}

TEST_CASE("assignment and code round trip") {
  const auto f7 = make_field(7);
  const Assignment a{{{1, 2, 4}, {1, 2, 4}}, {1, 2, 4}};
  const auto j = assignment_to_json(*f7, a);
  CHECK(j["q"] == 7);
  CHECK(assignment_from_json(j) == a);
  CHECK(errc_of([] { assignment_from_json({{"q", 7}}); }) == Errc::ParseError);

  const auto net = fig2a_network();
  const auto code = code_from_assignment(net, {3, 3, 3}, f7, a);
  const auto cj = code_to_json(net, code);
  CHECK(cj["coefficients"].size() == 18);
  const auto back = code_from_json(net, cj);
  CHECK(coding_vectors(net, back) == coding_vectors(net, code));
  CHECK(verify_solution(net, back).ok);
}

TEST_CASE("field and verdict json") {
  const auto f16 = make_field(16);
  const auto j = field_to_json(*f16);
  CHECK(j["p"] == 2);
  CHECK(j["m"] == 4);
  CHECK(j["q"] == 16);
  CHECK(j["modulus"] == 3);

  const auto f7 = make_field(7);
  const auto v = condition_feasible({3, 3, 3}, f7);
  const auto vj = verdict_to_json(*f7, nullptr, v);
  CHECK(vj["status"] == "solvable");
  CHECK(vj["method"] == "condition");
  CHECK(vj.contains("explored"));
  CHECK_FALSE(verdict_to_json(*f7, nullptr, v, false).contains("explored"));

  const auto scan = scan_family(SwirlFamily{3}, 4, 6, ScanMethod::Auto);
  const auto sj = scan_to_json(scan, true);
  CHECK(sj["q_min"] == 5);
  CHECK(sj["verdicts"].size() == 3);
  for (const auto& e : sj["verdicts"]) CHECK(e["elapsed_ms"] == 0);
  CHECK(sj["verdicts"][2]["status"] == "n/a");
  CHECK(scan_to_json(scan, true).dump() == scan_to_json(scan_family(SwirlFamily{3}, 4, 6, ScanMethod::Auto), true).dump());
}

TEST_CASE("dot export") {
  const auto net = fig2a_network();
  const auto dot = to_dot(net);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("rank=same") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("grey") != std::string::npos);
  CHECK(dot.find("\"e0\"") != std::string::npos);
  std::size_t arrows = 0;
  for (auto pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) ++arrows;
  CHECK(arrows == net.edge_count());
}

TEST_CASE("presets") {
  CHECK(preset_names().size() == 8);
  CHECK(errc_of([] { run_preset("nope"); }) == Errc::InvalidParam);
  for (const auto* name : {"growth-lemma", "gap-corollary", "swirl-example", "combination-fig1"}) {
    const auto r = run_preset(name);
    CAPTURE(name);
    CHECK(r.ok());
    CHECK_FALSE(r.claims.empty());
  }
}
