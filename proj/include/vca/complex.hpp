#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vca/arith.hpp"
#include "vca/error.hpp"
#include "vca/monomial.hpp"

namespace vca {

/// Sorted, 0-indexed vertex set.
using Facet = std::vector<int>;

namespace detail {

inline bool is_subset(const Facet& a, const Facet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline bool facet_order(const Facet& a, const Facet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline std::string facet_string(const Facet& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i] + 1);
  return s + "}";
}

// Calls fn(subset) for every size-k subset of {0..n-1} in lex order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  Facet s(k);
  std::iota(s.begin(), s.end(), 0);
  for (;;) {
    fn(static_cast<const Facet&>(s));
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace detail

/// A simplicial complex on n vertices given by its facets, each carrying a
/// positive integer weight. Facets are kept sorted by size, then lex.
class WeightedComplex {
 public:
  WeightedComplex() = default;

  /// Validates and canonicalizes 0-indexed facets. Throws InvalidComplex.
  WeightedComplex(std::size_t n, std::vector<Facet> facets, std::vector<Int> weights) : n_(n) {
    if (weights.size() != facets.size())
      throw InvalidComplex(ComplexDefect::WeightCountMismatch,
                           std::to_string(facets.size()) + " facets, " + std::to_string(weights.size()) + " weights");
    for (std::size_t i = 0; i < facets.size(); ++i) {
      auto& f = facets[i];
      if (f.empty()) throw InvalidComplex(ComplexDefect::EmptyFacet, "facet #" + std::to_string(i + 1));
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end())
        throw InvalidComplex(ComplexDefect::DuplicateVertex, detail::facet_string(f));
      if (f.front() < 0 || static_cast<std::size_t>(f.back()) >= n)
        throw InvalidComplex(ComplexDefect::VertexOutOfRange,
                             "facet #" + std::to_string(i + 1) + " with n=" + std::to_string(n));
      if (weights[i] < 1)
        throw InvalidComplex(ComplexDefect::NonPositiveWeight,
                             "weight " + std::to_string(weights[i]) + " on " + detail::facet_string(f));
    }
    for (std::size_t i = 0; i < facets.size(); ++i)
      for (std::size_t j = 0; j < facets.size(); ++j)
        if (i != j && detail::is_subset(facets[i], facets[j]))
          throw InvalidComplex(ComplexDefect::ComparableFacets,
                               detail::facet_string(facets[i]) + " is contained in " + detail::facet_string(facets[j]));
    std::vector<std::size_t> order(facets.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return detail::facet_order(facets[a], facets[b]); });
    for (std::size_t i : order) {
      facets_.push_back(std::move(facets[i]));
      weights_.push_back(weights[i]);
    }
  }

  /// Canonical weights (all 1).
  WeightedComplex(std::size_t n, std::vector<Facet> facets)
      : WeightedComplex(n, facets, std::vector<Int>(facets.size(), 1)) {}

  std::size_t n() const noexcept { return n_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Int>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return facets_.size(); }

  bool has_canonical_weights() const noexcept {
    return std::all_of(weights_.begin(), weights_.end(), [](Int w) { return w == 1; });
  }

  bool is_graph() const noexcept {
    return std::all_of(facets_.begin(), facets_.end(), [](const Facet& f) { return f.size() == 2; });
  }

  WeightedComplex with_weights(std::vector<Int> weights) const { return WeightedComplex(n_, facets_, std::move(weights)); }

  friend bool operator==(const WeightedComplex&, const WeightedComplex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Facet> facets_;
  std::vector<Int> weights_;
};

/// Complex as it appears in files: 1-indexed vertices, weights optional.
struct RawComplex {
  Int n = 0;
  std::vector<std::vector<Int>> facets;
  std::optional<std::vector<Int>> weights;
};

inline WeightedComplex validate(const RawComplex& raw) {
  if (raw.n < 1) throw InvalidArgument("vertex count must be positive");
  std::vector<Facet> facets;
  facets.reserve(raw.facets.size());
  for (std::size_t i = 0; i < raw.facets.size(); ++i) {
    Facet f;
    for (Int v : raw.facets[i]) {
      if (v < 1 || v > raw.n)
        throw InvalidComplex(ComplexDefect::VertexOutOfRange,
                             "vertex " + std::to_string(v) + " in facet #" + std::to_string(i + 1) +
                                 " (vertices are 1.." + std::to_string(raw.n) + ")");
      f.push_back(static_cast<int>(v - 1));
    }
    facets.push_back(std::move(f));
  }
  std::vector<Int> weights = raw.weights.value_or(std::vector<Int>(facets.size(), 1));
  return WeightedComplex(static_cast<std::size_t>(raw.n), std::move(facets), std::move(weights));
}

/// A candidate vertex cover `a` of order `k`; also a lattice point (a, k) of
/// the cover cone and the monomial x^a t^k.
struct CoverPoint {
  ExponentVector a;
  Int k = 0;

  friend bool operator==(const CoverPoint&, const CoverPoint&) = default;
};

/// Listing order: ascending order k, then lex with x1 > x2 > ... (larger vectors first).
inline bool cover_point_less(const CoverPoint& x, const CoverPoint& y) {
  if (x.k != y.k) return x.k < y.k;
  return x.a > y.a;
}

/// Minimal generators of a vertex cover algebra over S: the indecomposable
/// covers of positive order, grouped by order. Degree-0 generators (the unit
/// vectors) are implicit.
struct AlgebraPresentation {
  std::size_t n = 0;
  std::vector<CoverPoint> generators;  // sorted by cover_point_less
  bool truncated = false;
  WeightedComplex source;

  std::map<Int, std::vector<CoverPoint>> by_degree() const {
    std::map<Int, std::vector<CoverPoint>> out;
    for (const auto& g : generators) out[g.k].push_back(g);
    return out;
  }
};

/// nu_F(a): the largest m with x^a in P_F^m, i.e. the sum of a over F.
inline Int nu(const ExponentVector& a, const Facet& f) {
  Int s = 0;
  for (int i : f) {
    if (i < 0 || static_cast<std::size_t>(i) >= a.size()) throw InvalidArgument("facet vertex outside exponent vector");
    s = checked_add(s, a[i]);
  }
  return s;
}

inline bool is_cover(const WeightedComplex& c, const ExponentVector& a, Int k) {
  if (a.size() != c.n()) throw DimensionMismatch("cover length does not match vertex count");
  if (k < 0) throw InvalidArgument("negative cover order");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (nu(a, c.facets()[i]) < checked_mul(k, c.weights()[i])) return false;
  return true;
}

/// The largest k with is_cover(c, a, k); nullopt when c has no facets.
inline std::optional<Int> max_order(const WeightedComplex& c, const ExponentVector& a) {
  std::optional<Int> best;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Int m = nu(a, c.facets()[i]) / c.weights()[i];
    if (!best || m < *best) best = m;
  }
  return best;
}

/// I*(c) = intersection over facets F of P_F^{w_F}.
inline MonomialIdeal cover_ideal(const WeightedComplex& c) {
  MonomialIdeal result = MonomialIdeal::unit(c.n());
  for (std::size_t i = 0; i < c.size(); ++i)
    result = intersect(result, prime_power(c.n(), c.facets()[i], c.weights()[i]));
  return result;
}

/// S-module generators of A_k: the minimal covers of order k.
inline std::vector<CoverPoint> module_generators(const WeightedComplex& c, Int k) {
  if (k < 1) throw InvalidArgument("module generators need a positive order");
  std::vector<Int> scaled;
  for (Int w : c.weights()) scaled.push_back(checked_mul(w, k));
  const MonomialIdeal ideal = cover_ideal(c.with_weights(std::move(scaled)));
  std::vector<CoverPoint> out;
  for (const auto& g : ideal.generators()) out.push_back({g, k});
  std::sort(out.begin(), out.end(), cover_point_less);
  return out;
}

/// The complex whose facets are the supports of the generators of a
/// squarefree ideal (canonical weights). The zero ideal gives no facets.
inline WeightedComplex facet_complex(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw NotSquarefree("facet complex needs a squarefree ideal");
  if (ideal.is_unit()) throw InvalidArgument("the unit ideal has no facet complex");
  std::vector<Facet> facets;
  for (const auto& g : ideal.generators()) {
    Facet f;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] == 1) f.push_back(static_cast<int>(i));
    facets.push_back(std::move(f));
  }
  return WeightedComplex(ideal.n(), std::move(facets));
}

/// Inclusion-minimal vertex sets meeting every facet, in canonical facet order.
inline std::vector<Facet> minimal_hitting_sets(std::size_t n, const std::vector<Facet>& facets) {
  std::vector<Facet> found;
  std::vector<char> chosen(n, 0);
  auto rec = [&](auto&& self) -> void {
    Facet current;
    for (std::size_t v = 0; v < n; ++v)
      if (chosen[v]) current.push_back(static_cast<int>(v));
    for (const auto& m : found)
      if (detail::is_subset(m, current)) return;
    auto open = std::find_if(facets.begin(), facets.end(), [&](const Facet& f) {
      return std::none_of(f.begin(), f.end(), [&](int v) { return chosen[v] != 0; });
    });
    if (open == facets.end()) {
      found.erase(std::remove_if(found.begin(), found.end(),
                                 [&](const Facet& m) { return detail::is_subset(current, m); }),
                  found.end());
      found.push_back(std::move(current));
      return;
    }
    for (int v : *open) {
      chosen[v] = 1;
      self(self);
      chosen[v] = 0;
    }
  };
  rec(rec);
  std::sort(found.begin(), found.end(), detail::facet_order);
  return found;
}

/// Complex of minimal vertex covers of `sigma` (canonical weights only).
inline WeightedComplex cover_complex(const WeightedComplex& sigma) {
  if (!sigma.has_canonical_weights()) throw PreconditionViolation("cover complex needs canonical weights");
  if (sigma.size() == 0) throw InvalidArgument("a complex without facets has only the empty cover");
  return WeightedComplex(sigma.n(), minimal_hitting_sets(sigma.n(), sigma.facets()));
}

/// I^(k) for a squarefree monomial ideal: intersection of P_F^k over the
/// minimal primes P_F of I.
inline MonomialIdeal squarefree_symbolic_power(const MonomialIdeal& ideal, Int k) {
  if (!ideal.is_squarefree()) throw NotSquarefree("symbolic power path needs a squarefree ideal");
  if (k < 1) throw InvalidArgument("symbolic power order must be positive");
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  const WeightedComplex primes = cover_complex(facet_complex(ideal));
  MonomialIdeal result = MonomialIdeal::unit(ideal.n());
  for (const auto& f : primes.facets()) result = intersect(result, prime_power(ideal.n(), f, k));
  return result;
}

/// j-th skeleton of the full simplex on n vertices: all (j+1)-subsets.
inline WeightedComplex skeleton(Int n, Int j) {
  if (n < 2 || j < 0 || j > n - 2)
    throw InvalidArgument("skeleton needs 0 <= j <= n-2, got n=" + std::to_string(n) + " j=" + std::to_string(j));
  std::vector<Facet> facets;
  detail::for_each_subset(static_cast<int>(n), static_cast<int>(j + 1), [&](const Facet& s) { facets.push_back(s); });
  return WeightedComplex(static_cast<std::size_t>(n), std::move(facets));
}

/// Closed-form generators of the skeleton's cover algebra: for each order q
/// in 1..j+1 every squarefree monomial on n-j+q-1 vertices.
inline AlgebraPresentation skeleton_generators(Int n, Int j) {
  AlgebraPresentation p;
  p.source = skeleton(n, j);
  p.n = static_cast<std::size_t>(n);
  for (Int q = 1; q <= j + 1; ++q) {
    detail::for_each_subset(static_cast<int>(n), static_cast<int>(n - j + q - 1), [&](const Facet& s) {
      ExponentVector a(p.n, 0);
      for (int v : s) a[v] = 1;
      p.generators.push_back({std::move(a), q});
    });
  }
  std::sort(p.generators.begin(), p.generators.end(), cover_point_less);
  return p;
}

struct StrippedComplex {
  WeightedComplex higher;  // facets with at least two vertices
  std::vector<std::pair<int, Int>> singletons;  // (vertex, weight) of zero-dimensional facets
  bool higher_empty = false;
};

/// Splits off the zero-dimensional facets; A(c) is isomorphic to A(higher).
inline StrippedComplex strip_zero_dim_facets(const WeightedComplex& c) {
  StrippedComplex out;
  std::vector<Facet> facets;
  std::vector<Int> weights;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c.facets()[i].size() == 1) {
      out.singletons.emplace_back(c.facets()[i][0], c.weights()[i]);
    } else {
      facets.push_back(c.facets()[i]);
      weights.push_back(c.weights()[i]);
    }
  }
  out.higher_empty = facets.empty();
  out.higher = WeightedComplex(c.n(), std::move(facets), std::move(weights));
  return out;
}

}  // namespace vca
