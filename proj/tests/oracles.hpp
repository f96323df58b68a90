#pragma once

// Reference implementations used only to cross-check the library. They are
// deliberately naive and share no code with src/.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "netfield/netgraph.hpp"

namespace oracle {

inline bool prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Polynomials over Z_p as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

inline Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(a);
  while (a.size() >= b.size()) {
    const int lead = a.back();
    const std::size_t shift = a.size() - b.size();
    // b is monic
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = ((a[shift + i] - lead * b[i]) % p + p) % p;
    a = trim(a);
  }
  return a;
}

inline Poly decode(std::uint32_t code, int p, int len) {
  Poly out(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(code % static_cast<std::uint32_t>(p));
    code /= static_cast<std::uint32_t>(p);
  }
  return out;
}

// Irreducible iff no monic polynomial of degree 1..deg-1 divides it.
inline bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; d < deg; ++d) {
    std::uint32_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint32_t>(p);
    for (std::uint32_t c = 0; c < count; ++c) {
      auto g = decode(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Unit-capacity edge-disjoint paths from `s` to a super sink joined to each
// target v with capacity |In(v)|; augmenting paths found by plain DFS over a
// dense capacity matrix.
inline int maxflow(const netfield::Network& net, const std::vector<netfield::NodeId>& targets) {
  const int n = static_cast<int>(net.node_count()) + 1;
  const int sink = n - 1;
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& e : net.edges()) ++cap[static_cast<std::size_t>(e.tail)][static_cast<std::size_t>(e.head)];
  for (auto t : targets) {
    cap[static_cast<std::size_t>(t)][static_cast<std::size_t>(sink)] += static_cast<int>(net.in_edges(t).size());
  }
  int flow = 0;
  while (true) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::function<bool(int)> dfs = [&](int u) {
      if (u == sink) return true;
      seen[static_cast<std::size_t>(u)] = true;
      for (int v = 0; v < n; ++v) {
        if (!seen[static_cast<std::size_t>(v)] && cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] > 0 &&
            dfs(v)) {
          --cap[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          ++cap[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
          return true;
        }
      }
      return false;
    };
    if (!dfs(net.source())) return flow;
    ++flow;
  }
}

// Number of k-subsets of `ids` with full maxflow, via the oracle above.
inline std::size_t count_valid(const netfield::Network& net, const std::vector<netfield::NodeId>& ids, int k) {
  std::size_t count = 0;
  std::vector<netfield::NodeId> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (static_cast<int>(pick.size()) == k) {
      count += oracle::maxflow(net, pick) == k ? 1 : 0;
      return;
    }
    for (std::size_t i = from; i < ids.size(); ++i) {
      pick.push_back(ids[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

// Rank over a prime field by elimination on a row-major copy.
inline int rank_mod_p(std::vector<std::vector<long>> rows, long p) {
  int r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(r);
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(r)]);
    long inv = 1;
    for (long x = 1; x < p; ++x) {
      if (rows[static_cast<std::size_t>(r)][c] * x % p == 1) inv = x;
    }
    for (auto& row : rows) {
      if (&row == &rows[static_cast<std::size_t>(r)]) continue;
      const long f = row[c] * inv % p;
      for (std::size_t j = 0; j < cols; ++j) row[j] = ((row[j] - f * rows[static_cast<std::size_t>(r)][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
