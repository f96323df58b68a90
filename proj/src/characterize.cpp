#include <algorithm>

#include "netfield/error.hpp"
#include "netfield/numbertheory.hpp"
#include "netfield/solver.hpp"
#include "solver_detail.hpp"

namespace netfield {

bool swirl_characterize(int omega, std::uint64_t q) {
  if (omega < 3) throw Error(Errc::InvalidParam, "swirl networks need omega >= 3");
  if (!is_prime_power(q)) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  if (q < 5) return false;
  if (is_prime(q - 1)) return q >= static_cast<std::uint64_t>(omega) + 3;
  return true;
}

Verdict swirl_verdict(int omega, const Field& field) {
  const auto q = field->q();
  Verdict v;
  v.method = "characterization";
  if (!swirl_characterize(omega, q)) {
    v.status = Status::Unsolvable;
    v.proof = q < 5 ? "q < 5" : "q - 1 is prime and q < omega + 3";
    return v;
  }
  const GeneralParams params{omega, 2, 2};
  if (!is_prime(q - 1)) {
    v = subgroup_heuristic(params, field);
    v.method = "characterization";
    return v;
  }
  // rows {1, xi}: the product set is {xi^0, ..., xi^(omega-1)}
  const std::vector<Elem> row{1, field->xi()};
  v.status = Status::Solvable;
  v.assignment = detail::complete_witness(
      *field, params, std::vector<std::vector<Elem>>(static_cast<std::size_t>(omega - 1), row));
  v.proof = "q - 1 is prime and q >= omega + 3";
  return v;
}

Verdict lower_bound_characterize(int m, std::uint64_t q) {
  if (m < 2) throw Error(Errc::InvalidParam, "lower-bound networks need m >= 2");
  if (!is_prime_power(q)) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  const auto mm = static_cast<std::uint64_t>(m);
  Verdict v;
  v.method = "characterization";
  if (q < mm + 4) {
    v.status = Status::Unsolvable;
    v.proof = "q < m + 4: the m distinct products leave fewer than 3 deltas";
    return v;
  }
  const bool mersenne = m >= 3 && is_mersenne_prime(2 * mm + 1);
  if (mersenne && q == 2 * mm + 1) {
    const auto field = make_field(q);
    auto g = subgroup_of_order(field, static_cast<std::uint32_t>(m));
    std::sort(g.elements.begin(), g.elements.end());
    const GeneralParams params{3, m, 3};
    v.status = Status::Solvable;
    v.assignment = detail::complete_witness(*field, params, {g.elements, g.elements});
    v.proof = "order-m subgroup of GF(2m + 1)^x";
    return v;
  }
  if (mersenne && q == 2 * mm + 2) {
    v.status = Status::Unsolvable;
    v.proof = "Cauchy-Davenport in Z_(2m+1): at least 2m - 1 products leave at most 2 deltas";
    return v;
  }
  v.status = Status::Unknown;
  v.proof = "outside the proven regimes";
  return v;
}

}  // namespace netfield
