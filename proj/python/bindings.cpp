#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "netfield/constructors.hpp"
#include "netfield/error.hpp"
#include "netfield/numbertheory.hpp"
#include "netfield/presets.hpp"
#include "netfield/serialize.hpp"
#include "netfield/solver.hpp"

namespace py = pybind11;
using namespace netfield;

// JSON crosses the boundary as text; the Python layer decodes it.
using Json = nlohmann::json;

namespace {

FamilyTag family_of(const std::string& text) { return family_from_json(Json::parse(text)); }

SearchOptions search(std::uint64_t budget, unsigned threads) { return {budget, threads}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Linear network coding solvability over finite fields";

  py::register_exception<Error>(m, "NetfieldError", PyExc_ValueError);

  m.def("field_info", [](std::uint64_t q) {
    const auto f = make_field(q);
    auto j = field_to_json(*f);
    j["xi"] = f->xi();
    j["subgroup_orders"] = proper_subgroup_orders(f);
    return j.dump();
  });

  m.def("construct", [](const std::string& family, std::uint64_t cap) {
    return network_to_json(build_family(family_of(family), cap)).dump();
  }, py::arg("family"), py::arg("cap") = kDefaultSubsetCap);

  m.def("to_dot", [](const std::string& network) { return to_dot(network_from_json(Json::parse(network))); });

  m.def("scan", [](const std::string& family, std::uint64_t lo, std::uint64_t hi, const std::string& method,
                   std::uint64_t budget, unsigned threads, bool normalize) {
    ScanOptions opts{search(budget, threads), normalize, kDefaultSubsetCap};
    const auto r = [&] {
      py::gil_scoped_release release;
      return scan_family(family_of(family), lo, hi, parse_scan_method(method), opts);
    }();
    return scan_to_json(r).dump();
  }, py::arg("family"), py::arg("lo"), py::arg("hi"), py::arg("method") = "auto",
     py::arg("budget") = kDefaultBudget, py::arg("threads") = 1U, py::arg("normalize") = true);

  m.def("condition_feasible", [](int omega, int d1, int d2, std::uint64_t q, std::uint64_t budget, unsigned threads) {
    const auto f = make_field(q);
    const auto v = [&] {
      py::gil_scoped_release release;
      return condition_feasible({omega, d1, d2}, f, search(budget, threads));
    }();
    return verdict_to_json(*f, nullptr, v).dump();
  }, py::arg("omega"), py::arg("d1"), py::arg("d2"), py::arg("q"), py::arg("budget") = kDefaultBudget,
     py::arg("threads") = 1U);

  m.def("oracle", [](const std::string& network, std::uint64_t q, std::uint64_t budget, bool normalize) {
    const auto net = network_from_json(Json::parse(network));
    const auto f = make_field(q);
    const auto v = [&] {
      py::gil_scoped_release release;
      return oracle_exhaustive(net, f, budget, normalize);
    }();
    return verdict_to_json(*f, &net, v).dump();
  }, py::arg("network"), py::arg("q"), py::arg("budget") = kDefaultBudget, py::arg("normalize") = true);

  m.def("verify", [](const std::string& network, const std::string& code) {
    const auto net = network_from_json(Json::parse(network));
    return verify_solution(net, code_from_json(net, Json::parse(code))).ok;
  });

  m.def("swirl_characterize", &swirl_characterize, py::arg("omega"), py::arg("q"));
  m.def("lower_bound_characterize", [](int mm, std::uint64_t q) {
    return std::string(status_name(lower_bound_characterize(mm, q).status));
  }, py::arg("m"), py::arg("q"));
  m.def("mersenne_q_star", &mersenne_q_star);

  m.def("preset_names", &preset_names);
  m.def("run_preset", [](const std::string& name, std::uint64_t budget) {
    const auto r = [&] {
      py::gil_scoped_release release;
      return run_preset(name, search(budget, 1));
    }();
    std::vector<std::tuple<std::string, bool, std::string>> claims;
    for (const auto& c : r.claims) claims.emplace_back(c.claim, c.pass, c.detail);
    return claims;
  }, py::arg("name"), py::arg("budget") = kDefaultBudget);
}
