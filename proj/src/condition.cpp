#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "netfield/error.hpp"
#include "netfield/solver.hpp"
#include "residue_set.hpp"
#include "solver_detail.hpp"

namespace netfield {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Solvable: return "solvable";
    case Status::Unsolvable: return "unsolvable";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

std::vector<Elem> signed_product_set(const FieldSpec& field, int omega,
                                     const std::vector<std::vector<Elem>>& rows) {
  std::set<Elem> acc{1};
  for (const auto& row : rows) {
    std::set<Elem> next;
    for (auto x : acc) {
      for (auto a : row) next.insert(field.mul(x, a));
    }
    acc = std::move(next);
  }
  std::set<Elem> out;
  for (auto x : acc) out.insert(omega % 2 == 0 ? x : field.neg(x));
  return {out.begin(), out.end()};
}

bool satisfies_condition(const FieldSpec& field, const GeneralParams& params, const Assignment& a) {
  if (a.alphas.size() != static_cast<std::size_t>(params.omega - 1)) return false;
  if (a.deltas.size() != static_cast<std::size_t>(params.d2)) return false;
  auto distinct_nonzero = [&](const std::vector<Elem>& xs) {
    std::set<Elem> seen;
    for (auto x : xs) {
      if (x == 0 || !field.contains(x) || !seen.insert(x).second) return false;
    }
    return true;
  };
  for (const auto& row : a.alphas) {
    if (row.size() != static_cast<std::size_t>(params.d1) || !distinct_nonzero(row)) return false;
  }
  if (!distinct_nonzero(a.deltas)) return false;
  const auto forbidden = signed_product_set(field, params.omega, a.alphas);
  return std::none_of(a.deltas.begin(), a.deltas.end(), [&](Elem d) {
    return std::binary_search(forbidden.begin(), forbidden.end(), d);
  });
}

namespace detail {

Assignment complete_witness(const FieldSpec& field, const GeneralParams& params,
                            std::vector<std::vector<Elem>> rows, const std::vector<Elem>& forbidden) {
  Assignment a{std::move(rows), {}};
  for (Elem x = 1; x < field.q() && a.deltas.size() < static_cast<std::size_t>(params.d2); ++x) {
    if (!std::binary_search(forbidden.begin(), forbidden.end(), x)) a.deltas.push_back(x);
  }
  return a;
}

Assignment complete_witness(const FieldSpec& field, const GeneralParams& params,
                            std::vector<std::vector<Elem>> rows) {
  const auto forbidden = signed_product_set(field, params.omega, rows);
  return complete_witness(field, params, std::move(rows), forbidden);
}

}  // namespace detail

namespace {

using detail::complete_witness;
using detail::ResidueSet;
using Combo = std::vector<std::size_t>;

struct BudgetExhausted {};

// Rows are {1} plus a (d1 - 1)-subset of the encodings 2..q-1, enumerated in
// lexicographic order; a row multiset is a non-decreasing sequence of rows.
class RowSpace {
 public:
  RowSpace(const FieldSpec& field, int d1) : field_(field), k_(static_cast<std::size_t>(d1 - 1)) {
    for (Elem x = 2; x < field.q(); ++x) {
      candidates_.push_back(x);
      logs_.push_back(field.dlog(x));
    }
  }

  Combo first() const {
    Combo c(k_);
    for (std::size_t i = 0; i < k_; ++i) c[i] = i;
    return c;
  }

  bool next(Combo& c) const {
    const std::size_t m = candidates_.size();
    std::size_t i = k_;
    while (i > 0 && c[i - 1] == m - k_ + i - 1) --i;
    if (i == 0) return false;
    ++c[i - 1];
    for (std::size_t j = i; j < k_; ++j) c[j] = c[j - 1] + 1;
    return true;
  }

  std::vector<std::uint32_t> logs(const Combo& c) const {
    std::vector<std::uint32_t> out{0};
    for (auto i : c) out.push_back(logs_[i]);
    return out;
  }

  std::vector<Elem> elements(const Combo& c) const {
    std::vector<Elem> out{1};
    for (auto i : c) out.push_back(candidates_[i]);
    return out;
  }

  std::uint32_t n() const { return field_.q() - 1; }

 private:
  const FieldSpec& field_;
  std::size_t k_;
  std::vector<Elem> candidates_;
  std::vector<std::uint32_t> logs_;
};

class FeasibilitySearch {
 public:
  FeasibilitySearch(const RowSpace& space, int rows, std::uint32_t limit, std::uint64_t budget,
                    std::atomic<std::uint64_t>& explored)
      : space_(space), rows_(rows), limit_(limit), budget_(budget), explored_(explored),
        path_(static_cast<std::size_t>(rows)) {}

  // Tries every completion whose first row is `head`.
  bool from_head(const Combo& head) {
    tick();
    ResidueSet base(space_.n());
    base.insert(0);
    const auto s = base.plus(space_.logs(head));
    if (s.size() > limit_) return false;
    path_[0] = head;
    return rows_ == 1 || descend(1, s, head);
  }

  const std::vector<Combo>& path() const { return path_; }

 private:
  void tick() {
    if (explored_.fetch_add(1, std::memory_order_relaxed) + 1 > budget_) throw BudgetExhausted{};
  }

  bool descend(int level, const ResidueSet& sum, Combo c) {
    do {
      tick();
      const auto s = sum.plus(space_.logs(c));
      if (s.size() <= limit_) {
        path_[static_cast<std::size_t>(level)] = c;
        if (level + 1 == rows_ || descend(level + 1, s, c)) return true;
      }
    } while (space_.next(c));
    return false;
  }

  const RowSpace& space_;
  int rows_;
  std::uint32_t limit_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& explored_;
  std::vector<Combo> path_;
};

void require_omega3(const GeneralParams& params) {
  params.validate();
  if (params.omega < 3) throw Error(Errc::InvalidParam, "the product-set condition needs omega >= 3");
}

}  // namespace

Verdict condition_feasible(const GeneralParams& params, const Field& field, const SearchOptions& options) {
  require_omega3(params);
  const auto& F = *field;
  const std::uint32_t units = F.q() - 1;
  Verdict v;
  v.method = "condition";
  if (static_cast<std::uint32_t>(params.d1) > units || static_cast<std::uint32_t>(params.d2) > units) {
    v.status = Status::Unsolvable;
    v.proof = "too few nonzero elements for distinct alphas or deltas";
    return v;
  }
  const std::uint32_t limit = units - static_cast<std::uint32_t>(params.d2);
  const int rows = params.omega - 1;
  const RowSpace space(F, params.d1);

  std::atomic<std::uint64_t> explored{0};
  std::atomic<std::size_t> best_head{SIZE_MAX};
  std::atomic<bool> exhausted{false};
  std::mutex mutex;
  std::map<std::size_t, std::vector<Combo>> hits;

  const unsigned threads = std::max(1U, options.threads);
  auto worker = [&](unsigned id) {
    FeasibilitySearch search(space, rows, limit, options.budget, explored);
    Combo head = space.first();
    std::size_t index = 0;
    try {
      do {
        if (index > best_head.load() || exhausted.load()) break;
        if (index % threads == id && search.from_head(head)) {
          std::lock_guard lock(mutex);
          hits.emplace(index, search.path());
          std::size_t cur = best_head.load();
          while (index < cur && !best_head.compare_exchange_weak(cur, index)) {
          }
          break;
        }
        ++index;
      } while (space.next(head));
    } catch (const BudgetExhausted&) {
      exhausted = true;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  v.explored = std::min(explored.load(), options.budget);
  if (!hits.empty()) {
    std::vector<std::vector<Elem>> witness_rows;
    for (const auto& c : hits.begin()->second) witness_rows.push_back(space.elements(c));
    v.status = Status::Solvable;
    v.assignment = complete_witness(F, params, std::move(witness_rows));
    v.proof = "row multiset found after " + std::to_string(v.explored) + " candidates";
  } else if (exhausted) {
    v.status = Status::Unknown;
    v.proof = "budget of " + std::to_string(options.budget) + " row candidates exhausted";
  } else {
    v.status = Status::Unsolvable;
    v.proof = "exhausted all " + std::to_string(v.explored) + " canonical row multisets";
  }
  return v;
}

Verdict subgroup_heuristic(const GeneralParams& params, const Field& field) {
  require_omega3(params);
  const auto& F = *field;
  const std::uint32_t units = F.q() - 1;
  Verdict v;
  v.method = "subgroup";
  for (auto order : proper_subgroup_orders(field)) {
    if (order < static_cast<std::uint32_t>(params.d1) || units - order < static_cast<std::uint32_t>(params.d2)) {
      continue;
    }
    auto g = subgroup_of_order(field, order);
    std::sort(g.elements.begin(), g.elements.end());
    const std::vector<Elem> row(g.elements.begin(), g.elements.begin() + params.d1);
    std::vector<Elem> signed_g;
    for (auto x : g.elements) signed_g.push_back(params.omega % 2 == 0 ? x : F.neg(x));
    std::sort(signed_g.begin(), signed_g.end());
    v.status = Status::Solvable;
    v.assignment = complete_witness(
        F, params, std::vector<std::vector<Elem>>(static_cast<std::size_t>(params.omega - 1), row), signed_g);
    v.proof = "subgroup of order " + std::to_string(order);
    return v;
  }
  v.status = Status::Unknown;
  v.proof = "no proper subgroup with |G| >= d1 and |complement| >= d2";
  return v;
}

std::optional<std::uint32_t> min_product_set(const Field& field, int d1, int rows, std::uint64_t budget) {
  const auto& F = *field;
  if (d1 < 1 || static_cast<std::uint32_t>(d1) > F.q() - 1 || rows < 1) {
    throw Error(Errc::InvalidParam, "need 1 <= d1 <= q - 1 and rows >= 1");
  }
  const RowSpace space(F, d1);
  std::uint32_t best = F.q() - 1;
  std::uint64_t explored = 0;
  const auto floor = static_cast<std::uint32_t>(d1);

  // returns true once the lower bound d1 is reached
  auto descend = [&](auto&& self, int level, const ResidueSet& sum, Combo c) -> bool {
    do {
      if (++explored > budget) throw BudgetExhausted{};
      const auto s = sum.plus(space.logs(c));
      const auto size = s.size();
      if (size < best || (level + 1 == rows && size <= best)) {
        if (level + 1 == rows) {
          best = std::min(best, size);
          if (best == floor) return true;
        } else if (self(self, level + 1, s, c)) {
          return true;
        }
      }
    } while (space.next(c));
    return false;
  };
  try {
    ResidueSet base(space.n());
    base.insert(0);
    descend(descend, 0, base, space.first());
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
  return best;
}

}  // namespace netfield
