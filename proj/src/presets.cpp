#include "netfield/presets.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "netfield/error.hpp"
#include "netfield/numbertheory.hpp"
#include "netfield/serialize.hpp"

namespace netfield {

bool PresetReport::ok() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass; });
}

namespace {

using Qs = std::vector<std::uint64_t>;

std::string show(const Qs& qs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < qs.size(); ++i) os << (i ? ", " : "") << qs[i];
  os << '}';
  return os.str();
}

ClaimResult expect_set(std::string claim, const Qs& got, const Qs& want) {
  return {std::move(claim), got == want, "got " + show(got) + ", expected " + show(want)};
}

ClaimResult expect_status(std::string claim, const Verdict& v, Status want) {
  return {std::move(claim), v.status == want,
          std::string(status_name(v.status)) + " via " + v.method + (v.proof.empty() ? "" : ": " + v.proof)};
}

// Lifts a reduced witness onto the network and checks every receiver.
ClaimResult expect_lifted(std::string claim, const Network& net, const GeneralParams& params, const Field& field,
                          const Assignment& a) {
  const bool eq4 = satisfies_condition(*field, params, a);
  const auto report = verify_solution(net, code_from_assignment(net, params, field, a));
  std::ostringstream os;
  os << "product-set condition " << (eq4 ? "holds" : "fails") << "; " << report.ranks.size() - report.failing.size()
     << "/" << report.ranks.size() << " receivers at full rank";
  return {std::move(claim), eq4 && report.ok, os.str()};
}

std::vector<Elem> xi_powers(const Field& f, std::initializer_list<std::uint64_t> ks) {
  std::vector<Elem> out;
  for (auto k : ks) out.push_back(f->exp(k));
  return out;
}

PresetReport lemma_fig2a(const SearchOptions& opt) {
  PresetReport r{"lemma-fig2a", {}};
  ScanOptions so{opt};
  const auto scan = scan_family(Fig2aFamily{}, 2, 13, ScanMethod::Condition, so);
  r.claims.push_back(expect_set("solvable exactly over GF(7), GF(9), GF(11), GF(13) in [2, 13]",
                                scan.with_status(Status::Solvable), {7, 9, 11, 13}));
  r.claims.push_back(expect_set("unsolvable over GF(2), GF(3), GF(4), GF(5), GF(8)",
                                scan.with_status(Status::Unsolvable), {2, 3, 4, 5, 8}));
  r.claims.push_back({"q_min = 7 and the only larger exception is 8",
                      scan.q_min == 7u && scan.exceptional_q == Qs{8}, "q_min " + (scan.q_min ? std::to_string(*scan.q_min) : "none") +
                                                                        ", exceptions " + show(scan.exceptional_q)});
  const auto f7 = make_field(7);
  const GeneralParams p{3, 3, 3};
  const Assignment shown{{{1, 2, 4}, {1, 2, 4}}, {1, 2, 4}};
  r.claims.push_back(expect_lifted("the order-3 subgroup matrix over GF(7) is a linear solution", fig2a_network(), p,
                                   f7, shown));
  const auto v = condition_feasible(p, f7, opt);
  r.claims.push_back({"the first witness found over GF(7) is that matrix", v.assignment && *v.assignment == shown,
                      v.assignment ? "\n" + witness_matrix(*f7, p, *v.assignment) : "no witness"});
  return r;
}

PresetReport lemma_fig2b(const SearchOptions& opt) {
  PresetReport r{"lemma-fig2b", {}};
  const auto scan = scan_family(Fig2bFamily{}, 13, 37, ScanMethod::Condition, ScanOptions{opt});
  r.claims.push_back(expect_set("unsolvable over GF(13) and GF(17) in [13, 37]", scan.with_status(Status::Unsolvable),
                                {13, 17}));
  r.claims.push_back(expect_set("solvable over every other prime power in [13, 37]",
                                scan.with_status(Status::Solvable), {16, 19, 23, 25, 27, 29, 31, 32, 37}));
  const auto below = scan_family(Fig2bFamily{}, 2, 15, ScanMethod::Condition, ScanOptions{opt});
  r.claims.push_back(expect_set("unsolvable over every field smaller than GF(16)", below.with_status(Status::Solvable),
                                {}));
  const auto net = fig2b_network();
  const GeneralParams p{3, 5, 10};
  {
    const auto f = make_field(16);
    const auto g = xi_powers(f, {3, 6, 9, 12, 15});
    std::vector<Elem> deltas;
    for (Elem x = 1; x < 16; ++x) {
      if (std::find(g.begin(), g.end(), x) == g.end()) deltas.push_back(x);
    }
    r.claims.push_back(expect_lifted("alphas = betas = xi^(3i) with the 10 remaining deltas solve GF(16)", net, p, f,
                                     {{g, g}, deltas}));
  }
  {
    const auto f = make_field(32);
    const auto g = xi_powers(f, {2, 4, 6, 8, 10});
    const auto deltas = xi_powers(f, {1, 3, 5, 7, 9, 11, 13, 15, 17, 19});
    r.claims.push_back(expect_lifted("alphas = betas = xi^(2i), deltas = xi^(2j-1) solve GF(32)", net, p, f,
                                     {{g, g}, deltas}));
  }
  return r;
}

PresetReport swirl_example(const SearchOptions& opt) {
  PresetReport r{"swirl-example", {}};
  const auto f5 = make_field(5);
  const GeneralParams p{6, 2, 2};
  const Assignment a{std::vector<std::vector<Elem>>(5, {1, 4}), {2, 3}};
  const auto net = swirl_network(6);
  r.claims.push_back(expect_lifted("the GF(5) code with alphas 4 and deltas 2, 3 solves the omega = 6 swirl", net, p,
                                   f5, a));
  const Matrix want = {{1, 1, 0, 0, 0, 0}, {1, 4, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}, {0, 1, 4, 0, 0, 0},
                       {0, 0, 1, 1, 0, 0}, {0, 0, 1, 4, 0, 0}, {0, 0, 0, 1, 1, 0}, {0, 0, 0, 1, 4, 0},
                       {0, 0, 0, 0, 1, 1}, {0, 0, 0, 0, 1, 4}, {1, 0, 0, 0, 0, 2}, {1, 0, 0, 0, 0, 3}};
  const auto code = code_from_assignment(net, p, f5, a);
  const auto f = coding_vectors(net, code);
  Matrix got;
  for (int i = 1; i <= 6; ++i) {
    for (int j = 1; j <= 2; ++j) got.push_back(f[static_cast<std::size_t>(layer4_edge(net, i, j))]);
  }
  r.claims.push_back({"the layer-4 coding vectors equal the prescribed 6 x 12 matrix", got == want,
                      "\n" + format_matrix(*f5, got)});
  r.claims.push_back(expect_status("the omega = 6 swirl is unsolvable over GF(8)",
                                   condition_feasible(p, make_field(8), opt), Status::Unsolvable));
  const auto min = min_product_set(make_field(8), 2, 5, opt.budget);
  r.claims.push_back({"over GF(8) every product set of five {1, a} rows has at least 6 elements", min == 6u,
                      min ? "minimum " + std::to_string(*min) : "budget exhausted"});
  return r;
}

PresetReport swirl_theorem(const SearchOptions& opt) {
  PresetReport r{"swirl-theorem", {}};
  int mismatches = 0;
  std::string first;
  for (int omega = 3; omega <= 8; ++omega) {
    for (auto q : prime_powers_in(2, 32)) {
      const bool c = swirl_characterize(omega, q);
      const auto v = condition_feasible({omega, 2, 2}, make_field(q), opt);
      if ((v.status == Status::Solvable) != c || v.status == Status::Unknown) {
        if (mismatches++ == 0) first = "omega " + std::to_string(omega) + ", q " + std::to_string(q);
      }
    }
  }
  r.claims.push_back({"closed form equals the exhaustive condition search for omega 3..8, q <= 32", mismatches == 0,
                      mismatches == 0 ? "no mismatches" : std::to_string(mismatches) + " mismatches, first at " + first});
  bool qmin_ok = true;
  for (int omega = 3; omega <= 40; ++omega) {
    const auto s = scan_family(SwirlFamily{omega}, 2, 64, ScanMethod::Characterization);
    qmin_ok = qmin_ok && s.q_min == 5u;
  }
  r.claims.push_back({"q_min = 5 for every omega in 3..40", qmin_ok, ""});
  for (int omega : {6, 14, 30}) {
    const auto s = scan_family(SwirlFamily{omega}, 2, 4 * static_cast<std::uint64_t>(omega + 3),
                               ScanMethod::Characterization);
    const auto unsolvable = s.with_status(Status::Unsolvable);
    const auto largest = unsolvable.empty() ? 0 : unsolvable.back();
    const auto star = mersenne_q_star(static_cast<std::uint64_t>(omega));
    r.claims.push_back({"largest unsolvable q for omega = " + std::to_string(omega) + " is the Mersenne bound",
                        largest == star,
                        "largest unsolvable " + std::to_string(largest) + ", bound " + std::to_string(star)});
  }
  return r;
}

PresetReport gap_corollary(const SearchOptions&) {
  PresetReport r{"gap-corollary", {}};
  const bool a = swirl_characterize(8192, 16);
  const bool b = swirl_characterize(8192, 512);
  const bool c = swirl_characterize(8192, 8192);
  r.claims.push_back({"the omega = 8192 swirl is solvable over GF(2^4)", a, a ? "solvable" : "unsolvable"});
  r.claims.push_back({"the omega = 8192 swirl is solvable over GF(2^9)", b, b ? "solvable" : "unsolvable"});
  r.claims.push_back({"the omega = 8192 swirl is unsolvable over GF(2^13)", !c, c ? "solvable" : "unsolvable"});
  return r;
}

PresetReport lowerbound_theorem(const SearchOptions& opt) {
  PresetReport r{"lowerbound-theorem", {}};
  const auto net = lower_bound_network(3);
  r.claims.push_back({"m = 3 gives 4m^2 + m + 7 = 46 receivers", net.receivers().size() == 46,
                      std::to_string(net.receivers().size()) + " receivers"});
  const std::map<std::uint64_t, Status> want = {{2, Status::Unsolvable}, {3, Status::Unsolvable},
                                                {4, Status::Unsolvable}, {5, Status::Unsolvable},
                                                {7, Status::Solvable},   {8, Status::Unsolvable}};
  for (const auto& [q, s] : want) {
    r.claims.push_back(expect_status("m = 3 over GF(" + std::to_string(q) + ") by closed form",
                                     lower_bound_characterize(3, q), s));
    r.claims.push_back(expect_status("m = 3 over GF(" + std::to_string(q) + ") by condition search",
                                     condition_feasible({3, 3, 3}, make_field(q), opt), s));
  }
  const auto f7 = make_field(7);
  const auto v = oracle_exhaustive(net, f7, opt.budget);
  const bool verified = v.code && verify_solution(net, *v.code).ok;
  r.claims.push_back({"coefficient search finds a code over GF(7) that every receiver accepts", verified,
                      std::string(status_name(v.status)) + ": " + v.proof});
  r.claims.push_back(expect_status("m = 15 over GF(31) by closed form", lower_bound_characterize(15, 31),
                                   Status::Solvable));
  r.claims.push_back(expect_status("m = 15 over GF(32) by closed form", lower_bound_characterize(15, 32),
                                   Status::Unsolvable));
  return r;
}

PresetReport combination_fig1(const SearchOptions& opt) {
  PresetReport r{"combination-fig1", {}};
  const auto net = combination_network(4, 2);
  r.claims.push_back({"the (4, 2) combination network has 6 receivers", net.receivers().size() == 6,
                      std::to_string(net.receivers().size()) + " receivers"});
  Qs solvable, unsolvable;
  for (auto q : prime_powers_in(2, 9)) {
    const auto v = oracle_exhaustive(net, make_field(q), opt.budget);
    if (v.status == Status::Solvable) solvable.push_back(q);
    if (v.status == Status::Unsolvable) unsolvable.push_back(q);
  }
  r.claims.push_back(expect_set("solvable over every prime power in [3, 9]", solvable, {3, 4, 5, 7, 8, 9}));
  r.claims.push_back(expect_set("unsolvable over GF(2)", unsolvable, {2}));
  return r;
}

PresetReport growth_lemma(const SearchOptions&) {
  PresetReport r{"growth-lemma", {}};
  for (std::uint32_t p : {2U, 3U}) {
    const std::uint32_t n = (1U << p) - 1;
    std::uint64_t tuples = 0, violations = 0;
    for (std::uint32_t len = 1; len <= 6; ++len) {
      std::vector<std::uint32_t> a(len, 1);
      while (true) {
        ++tuples;
        if (subset_sums(a, n).size() < std::min(len + 1, n)) ++violations;
        std::size_t i = 0;
        while (i < len && a[i] == n - 1) a[i++] = 1;
        if (i == len) break;
        ++a[i];
      }
    }
    r.claims.push_back({"subset sums mod 2^" + std::to_string(p) + " - 1 reach min(n + 1, 2^p - 1) for n <= 6",
                        violations == 0,
                        std::to_string(tuples) + " tuples, " + std::to_string(violations) + " violations"});
  }
  return r;
}

using Runner = std::function<PresetReport(const SearchOptions&)>;

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"lemma-fig2a", lemma_fig2a},       {"lemma-fig2b", lemma_fig2b},
      {"swirl-example", swirl_example},   {"swirl-theorem", swirl_theorem},
      {"gap-corollary", gap_corollary},   {"lowerbound-theorem", lowerbound_theorem},
      {"combination-fig1", combination_fig1}, {"growth-lemma", growth_lemma},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, run] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

PresetReport run_preset(std::string_view name, const SearchOptions& options) {
  for (const auto& [n, run] : registry()) {
    if (n == name) return run(options);
  }
  throw Error(Errc::InvalidParam, "unknown preset '" + std::string(name) + "'");
}

}  // namespace netfield
