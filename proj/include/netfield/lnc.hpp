#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "netfield/constructors.hpp"
#include "netfield/gf.hpp"
#include "netfield/netgraph.hpp"

namespace netfield {

/// Edges d, e meeting at a node v with d in In(v) and e in Out(v).
struct AdjacentPair {
  EdgeId in = 0;
  EdgeId out = 0;

  auto operator<=>(const AdjacentPair&) const = default;
};

/// All adjacent pairs, ordered by (out, in).
std::vector<AdjacentPair> adjacent_pairs(const Network& net);

/// A pair is pinned to 1 when `in` is the only incoming edge of its node.
bool is_pinned(const Network& net, const AdjacentPair& pair);

/// Free pairs grouped by outgoing edge. Groups follow the topological rank
/// of the tail node, then edge id; within a group, incoming edge id. For the
/// family constructors this is plain (out, in) edge-id order.
std::vector<AdjacentPair> indeterminates(const Network& net);

class LinearCode {
 public:
  explicit LinearCode(Field field) : field_(std::move(field)) {}

  /// Pinned pairs set to 1, free pairs set to 0.
  static LinearCode with_defaults(const Network& net, Field field);

  const Field& field() const noexcept { return field_; }
  const std::map<AdjacentPair, Elem>& coefficients() const noexcept { return coeffs_; }

  void set(const AdjacentPair& pair, Elem value);
  void set(const AdjacentPair& pair, const FieldElement& value);
  std::optional<Elem> get(const AdjacentPair& pair) const;

 private:
  Field field_;
  std::map<AdjacentPair, Elem> coeffs_;
};

using Vector = std::vector<Elem>;
/// Column-major matrix: a list of omega-dimensional columns.
using Matrix = std::vector<Vector>;

/// Coding vector per edge id. Throws Error(MissingCoefficient) for an unset
/// free pair and Error(InvalidParam) for a pinned pair different from 1.
Matrix coding_vectors(const Network& net, const LinearCode& code);
/// Same, evaluated along a caller-supplied topological order.
Matrix coding_vectors(const Network& net, const LinearCode& code, const std::vector<NodeId>& order);

struct ReceiverRank {
  NodeId receiver = 0;
  int rank = 0;
};

struct VerifyReport {
  bool ok = false;
  std::vector<ReceiverRank> ranks;
  std::vector<NodeId> failing;
};

VerifyReport verify_solution(const Network& net, const LinearCode& code);

/// Rank by Gaussian elimination, columns processed left to right.
int rank(const FieldSpec& field, const Matrix& columns);

/// Scratch-free rank of `count` columns of height `rows`; used on hot paths.
int rank_of_columns(const FieldSpec& field, std::span<const Elem* const> columns, int rows);

/// Reduced witness of the product-set condition: omega - 1 rows of d1
/// alphas (row i couples u_i and u_{i+1}) and d2 deltas (couple u_1 and
/// u_omega).
struct Assignment {
  std::vector<std::vector<Elem>> alphas;
  std::vector<Elem> deltas;

  bool operator==(const Assignment&) const = default;
};

/// The layer-4 coding-vector matrix prescribed by an assignment, columns
/// ordered e_11..e_1d1, ..., e_omega1..e_omegad2.
Matrix reduced_matrix(const FieldSpec& field, const GeneralParams& params, const Assignment& a);

/// Code on a five-layer family network realizing reduced_matrix. The first
/// in-edge of each layer-3 node gets coefficient 1, the second gets alpha
/// (or delta under v_omega). Throws Error(ShapeMismatch) or
/// Error(ZeroCoefficient).
LinearCode code_from_assignment(const Network& net, const GeneralParams& params, const Field& field,
                                const Assignment& a);

/// One line per matrix row, entries pretty-printed and space separated.
std::string format_matrix(const FieldSpec& field, const Matrix& columns);

}  // namespace netfield
