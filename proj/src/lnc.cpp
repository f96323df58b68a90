#include "netfield/lnc.hpp"

#include <algorithm>
#include <sstream>

#include "netfield/error.hpp"

namespace netfield {

std::vector<AdjacentPair> adjacent_pairs(const Network& net) {
  std::vector<AdjacentPair> out;
  for (const auto& e : net.edges()) {
    for (auto d : net.in_edges(e.tail)) out.push_back({d, e.id});
  }
  return out;
}

bool is_pinned(const Network& net, const AdjacentPair& pair) {
  return net.in_edges(net.edge(pair.out).tail).size() == 1;
}

std::vector<AdjacentPair> indeterminates(const Network& net) {
  const auto order = topo_order(net);
  std::vector<std::size_t> rank(net.node_count());
  for (std::size_t i = 0; i < order.size(); ++i) rank[static_cast<std::size_t>(order[i])] = i;
  std::vector<EdgeId> outs;
  for (const auto& e : net.edges()) {
    if (net.in_edges(e.tail).size() >= 2) outs.push_back(e.id);
  }
  std::stable_sort(outs.begin(), outs.end(), [&](EdgeId a, EdgeId b) {
    return rank[static_cast<std::size_t>(net.edge(a).tail)] < rank[static_cast<std::size_t>(net.edge(b).tail)];
  });
  std::vector<AdjacentPair> out;
  for (auto e : outs) {
    for (auto d : net.in_edges(net.edge(e).tail)) out.push_back({d, e});
  }
  return out;
}

LinearCode LinearCode::with_defaults(const Network& net, Field field) {
  LinearCode code(std::move(field));
  for (const auto& pair : adjacent_pairs(net)) code.coeffs_[pair] = is_pinned(net, pair) ? 1 : 0;
  return code;
}

void LinearCode::set(const AdjacentPair& pair, Elem value) {
  if (!field_->contains(value)) throw Error(Errc::InvalidParam, "coefficient outside the field");
  coeffs_[pair] = value;
}

void LinearCode::set(const AdjacentPair& pair, const FieldElement& value) {
  if (!field_->same_as(*value.field())) throw Error(Errc::FieldMismatch, "coefficient from another field");
  coeffs_[pair] = value.value();
}

std::optional<Elem> LinearCode::get(const AdjacentPair& pair) const {
  const auto it = coeffs_.find(pair);
  if (it == coeffs_.end()) return std::nullopt;
  return it->second;
}

Matrix coding_vectors(const Network& net, const LinearCode& code) {
  return coding_vectors(net, code, topo_order(net));
}

Matrix coding_vectors(const Network& net, const LinearCode& code, const std::vector<NodeId>& order) {
  const auto& field = *code.field();
  const auto omega = static_cast<std::size_t>(net.omega());
  Matrix f(net.edge_count(), Vector(omega, 0));
  std::vector<bool> done(net.edge_count(), false);
  for (auto v : order) {
    const auto& ins = net.in_edges(v);
    const auto& outs = net.out_edges(v);
    if (v == net.source()) {
      for (std::size_t k = 0; k < outs.size(); ++k) {
        f[static_cast<std::size_t>(outs[k])][k] = 1;
        done[static_cast<std::size_t>(outs[k])] = true;
      }
      continue;
    }
    for (auto d : ins) {
      if (!done[static_cast<std::size_t>(d)]) throw Error(Errc::InvalidParam, "order is not topological");
    }
    for (auto e : outs) {
      auto& fe = f[static_cast<std::size_t>(e)];
      for (auto d : ins) {
        const AdjacentPair pair{d, e};
        const auto k = code.get(pair);
        Elem coeff = 1;
        if (ins.size() == 1) {
          if (k && *k != 1) {
            throw Error(Errc::InvalidParam, "pinned coefficient on edge " + std::to_string(e) + " must be 1");
          }
        } else {
          if (!k) {
            throw Error(Errc::MissingCoefficient,
                        "no coefficient for pair (" + std::to_string(d) + ", " + std::to_string(e) + ")");
          }
          coeff = *k;
        }
        if (coeff == 0) continue;
        const auto& fd = f[static_cast<std::size_t>(d)];
        for (std::size_t r = 0; r < omega; ++r) fe[r] = field.add(fe[r], field.mul(coeff, fd[r]));
      }
      done[static_cast<std::size_t>(e)] = true;
    }
  }
  return f;
}

int rank_of_columns(const FieldSpec& field, std::span<const Elem* const> columns, int rows) {
  // pivot columns, each normalized to 1 at its pivot row and reduced against earlier pivots
  thread_local std::vector<Elem> basis;
  thread_local std::vector<Elem> work;
  thread_local std::vector<int> pivot_row;
  const auto r = static_cast<std::size_t>(rows);
  basis.resize(r * r);
  work.resize(r);
  pivot_row.resize(r);
  int rank = 0;
  for (const Elem* col : columns) {
    if (rank == rows) break;
    std::copy(col, col + rows, work.begin());
    for (int b = 0; b < rank; ++b) {
      const Elem c = work[static_cast<std::size_t>(pivot_row[static_cast<std::size_t>(b)])];
      if (c == 0) continue;
      const Elem* vec = basis.data() + static_cast<std::size_t>(b) * r;
      const Elem nc = field.neg(c);
      for (std::size_t i = 0; i < r; ++i) {
        if (vec[i] != 0) work[i] = field.add(work[i], field.mul(nc, vec[i]));
      }
    }
    std::size_t p = 0;
    while (p < r && work[p] == 0) ++p;
    if (p == r) continue;
    const Elem inv = field.inv(work[p]);
    Elem* dst = basis.data() + static_cast<std::size_t>(rank) * r;
    for (std::size_t i = 0; i < r; ++i) dst[i] = field.mul(inv, work[i]);
    pivot_row[static_cast<std::size_t>(rank++)] = static_cast<int>(p);
  }
  return rank;
}

int rank(const FieldSpec& field, const Matrix& columns) {
  if (columns.empty()) return 0;
  const auto rows = columns.front().size();
  std::vector<const Elem*> ptrs;
  for (const auto& c : columns) {
    if (c.size() != rows) throw Error(Errc::ShapeMismatch, "ragged matrix");
    for (auto x : c) {
      if (!field.contains(x)) throw Error(Errc::FieldMismatch, "entry outside the field");
    }
    ptrs.push_back(c.data());
  }
  return rank_of_columns(field, ptrs, static_cast<int>(rows));
}

VerifyReport verify_solution(const Network& net, const LinearCode& code) {
  const auto f = coding_vectors(net, code);
  VerifyReport report{true, {}, {}};
  std::vector<const Elem*> cols;
  for (auto t : net.receivers()) {
    cols.clear();
    for (auto e : net.in_edges(t)) cols.push_back(f[static_cast<std::size_t>(e)].data());
    const int r = rank_of_columns(*code.field(), cols, net.omega());
    report.ranks.push_back({t, r});
    if (r != net.omega()) {
      report.ok = false;
      report.failing.push_back(t);
    }
  }
  return report;
}

namespace {

void check_shape(const GeneralParams& params, const Assignment& a) {
  if (a.alphas.size() != static_cast<std::size_t>(params.omega - 1)) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(params.omega - 1) + " alpha rows");
  }
  for (const auto& row : a.alphas) {
    if (row.size() != static_cast<std::size_t>(params.d1)) {
      throw Error(Errc::ShapeMismatch, "expected " + std::to_string(params.d1) + " alphas per row");
    }
  }
  if (a.deltas.size() != static_cast<std::size_t>(params.d2)) {
    throw Error(Errc::ShapeMismatch, "expected " + std::to_string(params.d2) + " deltas");
  }
}

}  // namespace

Matrix reduced_matrix(const FieldSpec& field, const GeneralParams& params, const Assignment& a) {
  check_shape(params, a);
  const auto omega = static_cast<std::size_t>(params.omega);
  Matrix cols;
  for (std::size_t i = 0; i + 1 < omega; ++i) {
    for (auto alpha : a.alphas[i]) {
      Vector c(omega, 0);
      c[i] = 1;
      c[i + 1] = alpha;
      cols.push_back(std::move(c));
    }
  }
  for (auto delta : a.deltas) {
    Vector c(omega, 0);
    c[0] = 1;
    c[omega - 1] = delta;
    cols.push_back(std::move(c));
  }
  for (const auto& c : cols) {
    for (auto x : c) {
      if (!field.contains(x)) throw Error(Errc::InvalidParam, "value outside the field");
    }
  }
  return cols;
}

LinearCode code_from_assignment(const Network& net, const GeneralParams& params, const Field& field,
                                const Assignment& a) {
  check_shape(params, a);
  if (net.omega() != params.omega) throw Error(Errc::ShapeMismatch, "omega differs from the network");
  for (const auto& row : a.alphas) {
    for (auto x : row) {
      if (x == 0) throw Error(Errc::ZeroCoefficient, "alpha must be nonzero");
    }
  }
  for (auto x : a.deltas) {
    if (x == 0) throw Error(Errc::ZeroCoefficient, "delta must be nonzero");
  }
  const auto layer3 = net.nodes_in_layer(3);
  if (layer3.size() != static_cast<std::size_t>(params.omega)) {
    throw Error(Errc::ShapeMismatch, "network does not have omega layer-3 nodes");
  }
  auto code = LinearCode::with_defaults(net, field);
  for (std::size_t i = 0; i < layer3.size(); ++i) {
    const auto& ins = net.in_edges(layer3[i]);
    const auto& outs = net.out_edges(layer3[i]);
    const bool last = i + 1 == layer3.size();
    const auto& values = last ? a.deltas : a.alphas[i];
    if (ins.size() != 2 || outs.size() != values.size()) {
      throw Error(Errc::ShapeMismatch, "layer-3 node " + net.node(layer3[i]).label + " has the wrong fan");
    }
    for (std::size_t j = 0; j < outs.size(); ++j) {
      code.set({ins[0], outs[j]}, Elem{1});
      code.set({ins[1], outs[j]}, values[j]);
    }
  }
  return code;
}

std::string format_matrix(const FieldSpec& field, const Matrix& columns) {
  if (columns.empty()) return {};
  // ξ is two bytes in UTF-8 but one column wide
  auto shown = [](const std::string& s) { return s.size() - (s.find("ξ") != std::string::npos ? 1 : 0); };
  std::vector<std::vector<std::string>> cells(columns.front().size());
  std::size_t width = 1;
  for (const auto& c : columns) {
    for (std::size_t r = 0; r < c.size(); ++r) {
      cells[r].push_back(field.format(c[r]));
      width = std::max(width, shown(cells[r].back()));
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) os << ' ';
      os << std::string(width - shown(row[k]), ' ') << row[k];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace netfield
