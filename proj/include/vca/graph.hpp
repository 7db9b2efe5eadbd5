#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "vca/arith.hpp"
#include "vca/complex.hpp"
#include "vca/error.hpp"
#include "vca/parallel.hpp"

namespace vca {

using Edge = std::pair<int, int>;  // 0-indexed, first < second

/// A simple weighted graph; equivalent to a complex whose facets are all edges.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  WeightedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Int> weights) {
    std::vector<Facet> facets;
    for (auto [u, v] : edges) {
      if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u + 1));
      facets.push_back({u, v});
    }
    // Validation rejects repeated edges as comparable facets.
    complex_ = WeightedComplex(n, std::move(facets), std::move(weights));
  }

  WeightedGraph(std::size_t n, std::vector<Edge> edges)
      : WeightedGraph(n, edges, std::vector<Int>(edges.size(), 1)) {}

  static WeightedGraph from_complex(const WeightedComplex& c) {
    if (!c.is_graph()) throw InvalidArgument("complex has a facet that is not an edge");
    WeightedGraph g;
    g.complex_ = c;
    return g;
  }

  std::size_t n() const noexcept { return complex_.n(); }
  std::size_t edge_count() const noexcept { return complex_.size(); }
  Edge edge(std::size_t i) const { return {complex_.facets()[i][0], complex_.facets()[i][1]}; }
  Int weight(std::size_t i) const { return complex_.weights()[i]; }
  const WeightedComplex& complex() const noexcept { return complex_; }

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(n());
    for (std::size_t i = 0; i < edge_count(); ++i) {
      auto [u, v] = edge(i);
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
  }

 private:
  WeightedComplex complex_;
};

struct Bipartition {
  bool bipartite = false;
  std::vector<int> u, v;        // when bipartite
  std::vector<int> odd_cycle;  // when not: vertices in cycle order
};

/// BFS 2-colouring; vertex 0 of each component is put in U.
inline Bipartition bipartition(const WeightedGraph& g) {
  const auto adj = g.adjacency();
  const std::size_t n = g.n();
  std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> bfs;
    bfs.push(static_cast<int>(s));
    while (!bfs.empty()) {
      const int x = bfs.front();
      bfs.pop();
      for (int y : adj[x]) {
        if (colour[y] == -1) {
          colour[y] = 1 - colour[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          bfs.push(y);
        } else if (colour[y] == colour[x]) {
          // Tree paths from x and y meet at their lowest common ancestor.
          std::vector<int> left{x}, right{y};
          int a = x, b = y;
          while (a != b) {
            if (depth[a] >= depth[b]) {
              a = parent[a];
              left.push_back(a);
            } else {
              b = parent[b];
              right.push_back(b);
            }
          }
          right.pop_back();
          Bipartition out;
          out.odd_cycle.assign(left.begin(), left.end());
          out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
          return out;
        }
      }
    }
  }
  Bipartition out;
  out.bipartite = true;
  for (std::size_t i = 0; i < n; ++i) (colour[i] == 0 ? out.u : out.v).push_back(static_cast<int>(i));
  return out;
}

struct CoverSplit {
  CoverPoint first;
  CoverPoint second;
};

/// Splits a cover of order k >= 3 of a canonically weighted graph into a
/// cover of order 2 plus a cover of order k-2: with A the zero set of a and
/// B its neighbourhood, eps is 0 on A, 2 on B and 1 elsewhere.
inline CoverSplit split_order2(const WeightedGraph& g, const ExponentVector& a, Int k) {
  if (!g.complex().has_canonical_weights()) throw PreconditionViolation("order-2 split needs canonical weights");
  if (k < 3) throw PreconditionViolation("order-2 split needs k >= 3");
  if (!is_cover(g.complex(), a, k)) throw PreconditionViolation("input is not a cover of the stated order");
  const std::size_t n = g.n();
  const auto adj = g.adjacency();
  ExponentVector eps(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] == 0) eps[i] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != 0) continue;
    for (int j : adj[i])
      if (a[j] != 0) eps[j] = 2;
  }
  ExponentVector rest(n);
  for (std::size_t i = 0; i < n; ++i) rest[i] = a[i] - eps[i];
  if (std::any_of(rest.begin(), rest.end(), [](Int x) { return x < 0; }) || !is_cover(g.complex(), eps, 2) ||
      !is_cover(g.complex(), rest, k - 2))
    throw Error("order-2 split produced an invalid cover");
  return {{std::move(eps), 2}, {std::move(rest), k - 2}};
}

/// Splits a cover of order k >= 2 of a bipartite graph with arbitrary weights
/// into b of order 1 and c = a - b of order k-1, with b = ceil(a/k) on U and
/// floor(a/k) on V.
inline CoverSplit bipartite_split(const WeightedGraph& g, const ExponentVector& a, Int k) {
  const Bipartition parts = bipartition(g);
  if (!parts.bipartite) throw PreconditionViolation("bipartite split on a non-bipartite graph");
  if (k < 2) throw PreconditionViolation("bipartite split needs k >= 2");
  if (!is_cover(g.complex(), a, k)) throw PreconditionViolation("input is not a cover of the stated order");
  ExponentVector b(g.n());
  for (int i : parts.u) b[i] = (a[i] + k - 1) / k;
  for (int j : parts.v) b[j] = a[j] / k;
  ExponentVector c(g.n());
  for (std::size_t i = 0; i < g.n(); ++i) c[i] = a[i] - b[i];
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    auto [x, y] = g.edge(e);
    const Int w = g.weight(e);
    if (b[x] + b[y] < w || c[x] + c[y] < checked_mul(k - 1, w))
      throw Error("rounding inequality failed on edge " + std::to_string(x + 1) + "-" + std::to_string(y + 1));
  }
  return {{std::move(b), 1}, {std::move(c), k - 1}};
}

/// Repeated bipartite_split: a cover of order k as k covers of order 1.
inline std::vector<CoverPoint> bipartite_chain(const WeightedGraph& g, const ExponentVector& a, Int k) {
  if (k < 1) throw PreconditionViolation("chain needs k >= 1");
  if (!is_cover(g.complex(), a, k)) throw PreconditionViolation("input is not a cover of the stated order");
  std::vector<CoverPoint> out;
  ExponentVector rest = a;
  for (Int order = k; order >= 2; --order) {
    auto split = bipartite_split(g, rest, order);
    out.push_back(std::move(split.first));
    rest = std::move(split.second.a);
  }
  out.push_back({std::move(rest), 1});
  return out;
}

inline constexpr std::size_t kMaxOddCycleVertices = 12;

/// Calls fn(cycle) once per simple cycle of odd length (vertex order along the cycle).
template <typename Fn>
void for_each_odd_cycle(const WeightedGraph& g, Fn&& fn) {
  if (g.n() > kMaxOddCycleVertices)
    throw InvalidArgument("odd-cycle enumeration is limited to " + std::to_string(kMaxOddCycleVertices) + " vertices");
  const auto adj = g.adjacency();
  const int n = static_cast<int>(g.n());
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  bool stop = false;
  // Cycles are rooted at their smallest vertex; path[1] < path.back() picks one direction.
  auto dfs = [&](auto&& self, int start, int x) -> void {
    for (int y : adj[x]) {
      if (stop) return;
      if (y == start && path.size() >= 3 && path.size() % 2 == 1 && path[1] < path.back()) {
        if (!fn(static_cast<const std::vector<int>&>(path))) stop = true;
      } else if (y > start && !on_path[y]) {
        on_path[y] = 1;
        path.push_back(y);
        self(self, start, y);
        path.pop_back();
        on_path[y] = 0;
      }
    }
  };
  for (int s = 0; s < n && !stop; ++s) {
    path = {s};
    on_path[s] = 1;
    dfs(dfs, s, s);
    on_path[s] = 0;
  }
}

/// Every vertex has a neighbour on every odd cycle.
inline bool prop52_condition(const WeightedGraph& g) {
  const auto adj = g.adjacency();
  bool ok = true;
  for_each_odd_cycle(g, [&](const std::vector<int>& cycle) {
    for (std::size_t i = 0; i < g.n(); ++i) {
      const bool touches = std::any_of(cycle.begin(), cycle.end(), [&](int j) {
        return std::binary_search(adj[i].begin(), adj[i].end(), j);
      });
      if (!touches) {
        ok = false;
        return false;
      }
    }
    return true;
  });
  return ok;
}

struct DecomposeOptions {
  std::uint64_t budget = 100'000'000;  // max of prod(a_i + 1) * (k - 1)
  unsigned threads = 1;
};

/// Search for covers b of order i and a-b of order k-i with 1 <= i <= k-1.
///
/// Scans b over the box [0, a] in mixed-radix order (last coordinate fastest)
/// and returns the first witness in that order, with the smallest feasible i.
/// nullopt certifies that a is indecomposable.
inline std::optional<CoverSplit> decompose(const WeightedComplex& c, const ExponentVector& a, Int k,
                                           const DecomposeOptions& opts = {}) {
  if (k < 2) throw InvalidArgument("decomposition needs order k >= 2");
  if (!is_cover(c, a, k)) throw PreconditionViolation("input is not a cover of the stated order");
  const std::size_t n = c.n();

  std::uint64_t space = static_cast<std::uint64_t>(k - 1);
  std::uint64_t boxes = 1;
  for (Int x : a) {
    const auto radix = static_cast<std::uint64_t>(x) + 1;
    if (__builtin_mul_overflow(boxes, radix, &boxes) || __builtin_mul_overflow(boxes, std::uint64_t(k - 1), &space) ||
        space > opts.budget)
      throw BudgetExceeded("decomposition search space exceeds budget " + std::to_string(opts.budget));
  }

  auto witness_at = [&](std::uint64_t index) -> std::optional<CoverSplit> {
    ExponentVector b(n), rest(n);
    for (std::size_t t = n; t-- > 0;) {
      const auto radix = static_cast<std::uint64_t>(a[t]) + 1;
      b[t] = static_cast<Int>(index % radix);
      index /= radix;
      rest[t] = a[t] - b[t];
    }
    Int low = k - 1;  // largest order of b, capped
    Int high = k - 1;
    for (std::size_t f = 0; f < c.size() && low >= 1 && high >= 1; ++f) {
      const Facet& facet = c.facets()[f];
      Int sb = 0, sr = 0;
      for (int v : facet) {
        sb += b[v];
        sr += rest[v];
      }
      low = std::min(low, sb / c.weights()[f]);
      high = std::min(high, sr / c.weights()[f]);
    }
    if (low < 1 || high < 1 || low + high < k) return std::nullopt;
    const Int i = std::max<Int>(1, k - high);
    return CoverSplit{{std::move(b), i}, {std::move(rest), k - i}};
  };

  const unsigned workers = std::max(1u, opts.threads);
  std::vector<std::optional<std::pair<std::uint64_t, CoverSplit>>> found(workers);
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  parallel_for(workers, workers, [&](std::size_t w) {
    const std::uint64_t begin = boxes * w / workers;
    const std::uint64_t end = boxes * (w + 1) / workers;
    for (std::uint64_t idx = begin; idx < end && idx < best.load(); ++idx) {
      if (auto hit = witness_at(idx)) {
        found[w] = {idx, std::move(*hit)};
        std::uint64_t cur = best.load();
        while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
        }
        return;
      }
    }
  });
  for (auto& f : found)
    if (f && f->first == best.load()) return std::move(f->second);
  return std::nullopt;
}

struct CounterexampleFamily {
  Int m = 0;
  Int k = 0;
  WeightedGraph graph;
  WeightedComplex complex;
  CoverPoint cover;  // indecomposable, order m*k + k + 1
};

/// Graph on n = m + 2k + 1 vertices whose cover algebra has a generator of
/// degree mk + k + 1. Vertices 1..m are joined to everything; i in m+1..n is
/// joined to i+k and i+k+1, where an index h > n stands for h - n + m.
inline CounterexampleFamily counterexample_family(Int m, Int k) {
  if (m < 2 || k < 2) throw InvalidArgument("family parameters need m >= 2 and k >= 2");
  const Int n = m + 2 * k + 1;
  auto wrap = [&](Int h) { return h > n ? h - n + m : h; };  // 1-indexed

  std::vector<Edge> edges;
  auto add_edge = [&](Int x, Int y) {
    Edge e{static_cast<int>(std::min(x, y) - 1), static_cast<int>(std::max(x, y) - 1)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  };
  for (Int i = 1; i <= m; ++i)
    for (Int j = 1; j <= n; ++j)
      if (j != i) add_edge(i, j);
  for (Int i = m + 1; i <= n; ++i) {
    add_edge(i, wrap(i + k));
    add_edge(i, wrap(i + k + 1));
  }

  std::vector<Facet> facets;
  auto complement = [&](const std::vector<Int>& removed) {
    Facet f;
    for (Int v = 1; v <= n; ++v)
      if (std::find(removed.begin(), removed.end(), v) == removed.end()) f.push_back(static_cast<int>(v - 1));
    return f;
  };
  for (Int j = 1; j <= m; ++j) facets.push_back(complement({j}));
  for (Int i = m + 1; i <= n; ++i) {
    std::vector<Int> window;
    for (Int t = 0; t < k; ++t) window.push_back(wrap(i + t));
    facets.push_back(complement(window));
  }

  CounterexampleFamily fam;
  fam.m = m;
  fam.k = k;
  fam.graph = WeightedGraph(static_cast<std::size_t>(n), std::move(edges));
  fam.complex = WeightedComplex(static_cast<std::size_t>(n), std::move(facets));
  fam.cover.k = m * k + k + 1;
  fam.cover.a.assign(static_cast<std::size_t>(n), 1);
  for (Int i = 0; i < m; ++i) fam.cover.a[i] = k;
  for (const auto& f : fam.complex.facets())
    if (nu(fam.cover.a, f) != fam.cover.k) throw Error("family facet sum differs from mk+k+1");
  return fam;
}

}  // namespace vca
