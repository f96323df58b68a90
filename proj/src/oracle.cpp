#include <algorithm>
#include <random>

#include "netfield/error.hpp"
#include "netfield/solver.hpp"

namespace netfield {

namespace {

// Free coefficient groups in search order. Stage g assigns group g and then
// fills in every pinned edge whose value is fixed by it; a receiver is
// checked at the stage where its last in-edge becomes known.
struct Plan {
  struct Group {
    EdgeId out;
    std::vector<EdgeId> ins;
    std::vector<EdgeId> copies;     // pinned edges (and their source in-edge) fixed at this stage
    std::vector<EdgeId> copy_from;
    std::vector<NodeId> receivers;
  };
  std::vector<EdgeId> initial_copies;
  std::vector<EdgeId> initial_from;
  std::vector<NodeId> initial_receivers;
  std::vector<Group> groups;
};

Plan make_plan(const Network& net) {
  Plan plan;
  const auto order = topo_order(net);
  const auto free_pairs = indeterminates(net);
  std::vector<int> stage(net.edge_count(), -2);
  for (const auto& pair : free_pairs) {
    if (plan.groups.empty() || plan.groups.back().out != pair.out) {
      plan.groups.push_back({pair.out, {}, {}, {}, {}});
      stage[static_cast<std::size_t>(pair.out)] = static_cast<int>(plan.groups.size()) - 1;
    }
    plan.groups.back().ins.push_back(pair.in);
  }
  for (auto e : net.out_edges(net.source())) stage[static_cast<std::size_t>(e)] = -1;
  for (auto v : order) {
    const auto& ins = net.in_edges(v);
    if (v == net.source() || ins.size() != 1) continue;
    for (auto e : net.out_edges(v)) {
      const int s = stage[static_cast<std::size_t>(ins[0])];
      stage[static_cast<std::size_t>(e)] = s;
      if (s < 0) {
        plan.initial_copies.push_back(e);
        plan.initial_from.push_back(ins[0]);
      } else {
        auto& g = plan.groups[static_cast<std::size_t>(s)];
        g.copies.push_back(e);
        g.copy_from.push_back(ins[0]);
      }
    }
  }
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    for (auto d : plan.groups[g].ins) {
      if (stage[static_cast<std::size_t>(d)] >= static_cast<int>(g)) {
        throw Error(Errc::InvalidParam, "coefficient groups are not in dependency order");
      }
    }
  }
  for (auto t : net.receivers()) {
    int s = -1;
    for (auto d : net.in_edges(t)) s = std::max(s, stage[static_cast<std::size_t>(d)]);
    if (s < 0) {
      plan.initial_receivers.push_back(t);
    } else {
      plan.groups[static_cast<std::size_t>(s)].receivers.push_back(t);
    }
  }
  return plan;
}

struct SearchExhausted {};

class Oracle {
 public:
  Oracle(const Network& net, const Field& field, std::uint64_t budget, bool normalize)
      : net_(net), field_(field), plan_(make_plan(net)), budget_(budget), normalize_(normalize),
        omega_(static_cast<std::size_t>(net.omega())), f_(net.edge_count() * omega_, 0),
        values_(plan_.groups.size()) {
    const auto q = field->q();
    if (q <= 256) {
      table_.resize(static_cast<std::size_t>(q) * q);
      for (Elem a = 0; a < q; ++a) {
        for (Elem b = 0; b < q; ++b) table_[a * q + b] = field->mul(a, b);
      }
    }
    const auto& outs = net.out_edges(net.source());
    for (std::size_t k = 0; k < outs.size(); ++k) at(outs[k])[k] = 1;
    for (std::size_t i = 0; i < plan_.initial_copies.size(); ++i) copy(plan_.initial_copies[i], plan_.initial_from[i]);
  }

  Verdict run() {
    Verdict v;
    v.method = normalize_ ? "oracle-normalized" : "oracle";
    if (!receivers_ok(plan_.initial_receivers)) {
      v.status = Status::Unsolvable;
      v.proof = "a receiver is rank deficient under every code";
      return v;
    }
    try {
      if (descend(0)) {
        v.status = Status::Solvable;
        v.code = make_code();
        v.proof = "code found after " + std::to_string(explored_) + " coefficient tuples";
      } else {
        v.status = Status::Unsolvable;
        v.proof = "exhausted all " + std::to_string(explored_) + " coefficient tuples";
      }
    } catch (const SearchExhausted&) {
      v.status = Status::Unknown;
      v.proof = "budget of " + std::to_string(budget_) + " coefficient tuples exhausted";
    }
    v.explored = std::min(explored_, budget_);
    return v;
  }

 private:
  Elem* at(EdgeId e) { return f_.data() + static_cast<std::size_t>(e) * omega_; }

  Elem mul(Elem a, Elem b) const {
    return table_.empty() ? field_->mul(a, b) : table_[a * field_->q() + b];
  }

  void copy(EdgeId e, EdgeId from) { std::copy_n(at(from), omega_, at(e)); }

  bool receivers_ok(const std::vector<NodeId>& receivers) {
    for (auto t : receivers) {
      cols_.clear();
      for (auto d : net_.in_edges(t)) cols_.push_back(at(d));
      if (rank_of_columns(*field_, cols_, net_.omega()) != net_.omega()) return false;
    }
    return true;
  }

  // odometer over the group's tuple, last coefficient fastest
  bool advance(std::vector<Elem>& tuple) const {
    const auto q = field_->q();
    for (std::size_t i = tuple.size(); i-- > 0;) {
      const Elem cap = (normalize_ && i == 0) ? std::min<Elem>(2, q) : q;
      if (tuple[i] + 1 < cap) {
        ++tuple[i];
        return true;
      }
      tuple[i] = 0;
    }
    return false;
  }

  bool descend(std::size_t g) {
    if (g == plan_.groups.size()) return true;
    const auto& group = plan_.groups[g];
    auto& tuple = values_[g];
    tuple.assign(group.ins.size(), 0);
    do {
      if (++explored_ > budget_) throw SearchExhausted{};
      Elem* fe = at(group.out);
      std::fill_n(fe, omega_, 0);
      for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] == 0) continue;
        const Elem* fd = at(group.ins[i]);
        for (std::size_t r = 0; r < omega_; ++r) fe[r] = field_->add(fe[r], mul(tuple[i], fd[r]));
      }
      for (std::size_t i = 0; i < group.copies.size(); ++i) copy(group.copies[i], group.copy_from[i]);
      if (receivers_ok(group.receivers) && descend(g + 1)) return true;
    } while (advance(tuple));
    return false;
  }

  LinearCode make_code() const {
    auto code = LinearCode::with_defaults(net_, field_);
    for (std::size_t g = 0; g < plan_.groups.size(); ++g) {
      const auto& group = plan_.groups[g];
      for (std::size_t i = 0; i < group.ins.size(); ++i) code.set({group.ins[i], group.out}, values_[g][i]);
    }
    return code;
  }

  const Network& net_;
  Field field_;
  Plan plan_;
  std::uint64_t budget_;
  bool normalize_;
  std::size_t omega_;
  std::vector<Elem> f_;
  std::vector<Elem> table_;
  std::vector<std::vector<Elem>> values_;
  std::vector<const Elem*> cols_;
  std::uint64_t explored_ = 0;
};

}  // namespace

Verdict oracle_exhaustive(const Network& net, const Field& field, std::uint64_t budget, bool normalize) {
  return Oracle(net, field, budget, normalize).run();
}

Verdict oracle_random(const Network& net, const Field& field, std::uint64_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(Errc::InvalidParam, "trials must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, field->q() - 1);
  const auto free_pairs = indeterminates(net);
  Verdict v;
  v.method = "random";
  for (std::uint64_t t = 1; t <= trials; ++t) {
    auto code = LinearCode::with_defaults(net, field);
    for (const auto& pair : free_pairs) code.set(pair, pick(rng));
    if (verify_solution(net, code).ok) {
      v.status = Status::Solvable;
      v.code = std::move(code);
      v.explored = t;
      v.proof = "random code accepted at trial " + std::to_string(t);
      return v;
    }
  }
  v.status = Status::Unknown;
  v.explored = trials;
  v.proof = "no solution in " + std::to_string(trials) + " random trials";
  return v;
}

}  // namespace netfield
