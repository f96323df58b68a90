#pragma once

// Linear solvability of the constructed network families over GF(q).
//
// Three independent routes are provided:
//   * condition_feasible: exact search for a witness of the reduced product-set
//     condition (rows of alphas whose signed product set leaves room for the
//     deltas), carried out on sumsets of discrete logs in Z_{q-1};
//   * characterizations: closed forms for the swirl and lower-bound families;
//   * oracle_exhaustive / oracle_random: search over actual coding
//     coefficients of an arbitrary network, checked receiver by receiver.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netfield/constructors.hpp"
#include "netfield/gf.hpp"
#include "netfield/lnc.hpp"

namespace netfield {

enum class Status { Solvable, Unsolvable, Unknown };

std::string_view status_name(Status s);

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Assignment> assignment;  // reduced-condition witness
  std::optional<LinearCode> code;        // coefficient-level witness
  std::string method;
  std::string proof;  // why Unsolvable / Unknown, or how the witness was found
  std::uint64_t explored = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
};

/// Direct check of a witness: row-wise distinct nonzero alphas, distinct
/// nonzero deltas, and no delta in {(-1)^omega g_1 ... g_{omega-1}}.
/// Enumerates the product set tuple by tuple.
bool satisfies_condition(const FieldSpec& field, const GeneralParams& params, const Assignment& a);

/// Signed product set (-1)^omega * A_1 ... A_{omega-1}, sorted by encoding.
std::vector<Elem> signed_product_set(const FieldSpec& field, int omega,
                                     const std::vector<std::vector<Elem>>& rows);

/// Exact search over row multisets normalized to contain 1. The witness is
/// the first hit in lexicographic order of (sorted) rows; deltas are the d2
/// smallest admissible encodings. Throws Error(InvalidParam) for omega < 3.
Verdict condition_feasible(const GeneralParams& params, const Field& field, const SearchOptions& options = {});

/// Witness from a proper subgroup G with |G| >= d1 and |GF(q)^x \ G| >= d2
/// (smallest such order); Unknown when no such subgroup exists.
Verdict subgroup_heuristic(const GeneralParams& params, const Field& field);

/// Exhaustive search over free coding coefficients in lexicographic order,
/// abandoning a prefix as soon as a fully determined receiver is rank
/// deficient. With `normalize`, the first coefficient of every free group is
/// restricted to {0, 1}.
Verdict oracle_exhaustive(const Network& net, const Field& field, std::uint64_t budget = kDefaultBudget,
                          bool normalize = true);

/// Uniform random coefficients; never reports Unsolvable.
Verdict oracle_random(const Network& net, const Field& field, std::uint64_t trials, std::uint64_t seed);

/// Swirl network solvability: (q - 1 composite and q >= 5) or (q - 1 prime
/// and q >= omega + 3). Throws Error(NotPrimePower).
bool swirl_characterize(int omega, std::uint64_t q);

/// swirl_characterize with a constructive witness for solvable fields.
Verdict swirl_verdict(int omega, const Field& field);

/// Proven regimes of the lower-bound family: q < m + 4 unsolvable; for a
/// Mersenne prime 2m + 1 with m >= 3, q = 2m + 1 solvable and q = 2m + 2
/// unsolvable; Unknown otherwise.
Verdict lower_bound_characterize(int m, std::uint64_t q);

/// Minimum of |A_1 ... A_rows| over d1-subsets of GF(q)^x; nullopt when the
/// budget runs out.
std::optional<std::uint32_t> min_product_set(const Field& field, int d1, int rows,
                                             std::uint64_t budget = kDefaultBudget);

enum class ScanMethod { Condition, Oracle, Characterization, Auto };

std::string_view scan_method_name(ScanMethod m);
ScanMethod parse_scan_method(std::string_view name);

struct ScanOptions {
  SearchOptions search;
  bool normalize = true;
  std::uint64_t subset_cap = kDefaultSubsetCap;
};

struct ScanEntry {
  std::uint64_t q = 0;
  std::optional<Verdict> verdict;  // empty when q is not a prime power
  std::string method;
  std::int64_t elapsed_ms = 0;

  std::string status() const;
};

struct ScanResult {
  FamilyTag family;
  std::vector<ScanEntry> verdicts;
  std::optional<std::uint64_t> q_min;
  std::vector<std::uint64_t> exceptional_q;

  std::vector<std::uint64_t> with_status(Status s) const;
};

ScanResult scan_family(const FamilyTag& family, std::uint64_t q_lo, std::uint64_t q_hi, ScanMethod method,
                       const ScanOptions& options = {});

}  // namespace netfield
