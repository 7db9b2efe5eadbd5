#pragma once

// Lattice points of the cover cone
//   C = { (z, y) in Q^{n+1} : sum_{i in F} z_i - w_F y >= 0 for all facets F, z >= 0, y >= 0 }
// and its Hilbert basis. Pipeline: extreme rays by double description,
// a placing triangulation into simplicial subcones, the lattice points of
// each half-open fundamental parallelepiped, and a final reduction.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "vca/arith.hpp"
#include "vca/complex.hpp"
#include "vca/error.hpp"
#include "vca/parallel.hpp"

namespace vca {

using LatticeVector = std::vector<Int>;

/// Order for lattice points of the cover cone: ascending last coordinate
/// (the degree), then larger vectors first.
inline bool lattice_point_less(const LatticeVector& a, const LatticeVector& b) {
  if (a.back() != b.back()) return a.back() < b.back();
  return a > b;
}

/// Inequality description {p : row . p >= 0 for every row}.
struct ConeSystem {
  std::size_t dim = 0;
  Matrix<Int> rows;
};

/// One row per facet (+1 on the facet's vertices, -w_F on the last
/// coordinate) followed by the dim non-negativity rows.
inline ConeSystem build_cone(const WeightedComplex& c) {
  ConeSystem sys;
  sys.dim = c.n() + 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    std::vector<Int> row(sys.dim, 0);
    for (int v : c.facets()[i]) row[v] = 1;
    row.back() = -c.weights()[i];
    sys.rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < sys.dim; ++i) {
    std::vector<Int> row(sys.dim, 0);
    row[i] = 1;
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

inline bool in_cone(const ConeSystem& c, std::span<const Int> p) {
  if (p.size() != c.dim) throw DimensionMismatch("point length does not match cone dimension");
  for (const auto& row : c.rows) {
    Int s = 0;
    for (std::size_t i = 0; i < c.dim; ++i) s = checked_add(s, checked_mul(row[i], p[i]));
    if (s < 0) return false;
  }
  return true;
}

namespace detail {

inline bool is_unit_row(const std::vector<Int>& row, std::size_t& axis) {
  std::size_t ones = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 1) {
      ++ones;
      axis = i;
    } else if (row[i] != 0) {
      return false;
    }
  }
  return ones == 1;
}

inline BigInt big_dot(const std::vector<Int>& row, const std::vector<BigInt>& v) {
  BigInt s = 0;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (row[i] != 0) s += row[i] * v[i];
  return s;
}

}  // namespace detail

/// Primitive generators of the extreme rays, sorted by lattice_point_less.
///
/// Incremental double description starting from the non-negative orthant,
/// which the system must contain. Two rays are combined only when they are
/// adjacent (no third ray is tight on every constraint they share).
inline std::vector<LatticeVector> extreme_rays(const ConeSystem& c) {
  const std::size_t d = c.dim;
  if (d == 0) throw DegenerateCone("zero-dimensional cone");
  std::vector<char> has_axis(d, 0);
  std::vector<char> processed(c.rows.size(), 0);
  for (std::size_t r = 0; r < c.rows.size(); ++r) {
    if (c.rows[r].size() != d) throw DimensionMismatch("constraint row length does not match dimension");
    std::size_t axis = 0;
    if (detail::is_unit_row(c.rows[r], axis) && !has_axis[axis]) {
      has_axis[axis] = 1;
      processed[r] = 1;
    }
  }
  if (std::count(has_axis.begin(), has_axis.end(), 1) != static_cast<std::ptrdiff_t>(d))
    throw DegenerateCone("system lacks the non-negativity constraints");

  struct Candidate {
    std::vector<BigInt> v;
    boost::dynamic_bitset<> tight;
  };
  std::vector<Candidate> rays;
  for (std::size_t i = 0; i < d; ++i) {
    Candidate cand{std::vector<BigInt>(d, 0), boost::dynamic_bitset<>(c.rows.size())};
    cand.v[i] = 1;
    for (std::size_t r = 0; r < c.rows.size(); ++r) {
      std::size_t axis = 0;
      if (processed[r] && detail::is_unit_row(c.rows[r], axis) && axis != i) cand.tight.set(r);
    }
    rays.push_back(std::move(cand));
  }

  for (std::size_t r = 0; r < c.rows.size(); ++r) {
    if (processed[r]) continue;
    const auto& row = c.rows[r];
    std::vector<BigInt> val(rays.size());
    std::vector<std::size_t> plus, zero, minus;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = detail::big_dot(row, rays[i].v);
      if (val[i] > 0) plus.push_back(i);
      else if (val[i] == 0) zero.push_back(i);
      else minus.push_back(i);
    }
    std::vector<Candidate> next;
    for (std::size_t i : zero) {
      next.push_back(rays[i]);
      next.back().tight.set(r);
    }
    for (std::size_t i : plus) next.push_back(rays[i]);
    for (std::size_t p : plus) {
      for (std::size_t m : minus) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[m].tight;
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t o = 0; o < rays.size() && adjacent; ++o) {
          if (o == p || o == m) continue;
          if (common.is_subset_of(rays[o].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        Candidate cand{std::vector<BigInt>(d), std::move(common)};
        for (std::size_t i = 0; i < d; ++i) cand.v[i] = val[p] * rays[m].v[i] - val[m] * rays[p].v[i];
        make_primitive(cand.v);
        cand.tight.set(r);
        next.push_back(std::move(cand));
      }
    }
    rays = std::move(next);
    processed[r] = 1;
  }

  std::vector<LatticeVector> out;
  Matrix<BigInt> check;
  for (const auto& cand : rays) {
    LatticeVector v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = to_int(cand.v[i]);
    out.push_back(std::move(v));
    check.push_back(cand.v);
  }
  if (out.empty() || rank(std::move(check)) < d)
    throw DegenerateCone("cone is not full-dimensional");
  std::sort(out.begin(), out.end(), lattice_point_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// A simplicial cone spanned by dim linearly independent rays; index = |det|.
struct SimplicialSubcone {
  std::vector<LatticeVector> rays;
  BigInt index;
};

/// Placing triangulation of the cone spanned by `rays`.
///
/// The first rays that raise the rank form the initial simplex; every later
/// ray is joined to each boundary facet of the current triangulation that it
/// lies strictly beyond. The result depends only on the input order.
inline std::vector<SimplicialSubcone> triangulate(std::span<const LatticeVector> rays) {
  if (rays.empty()) throw DegenerateCone("no rays to triangulate");
  const std::size_t d = rays.front().size();
  for (const auto& r : rays)
    if (r.size() != d) throw DimensionMismatch("rays of different lengths");

  std::vector<std::size_t> initial;
  Matrix<Int> basis;
  for (std::size_t i = 0; i < rays.size() && initial.size() < d; ++i) {
    basis.push_back(rays[i]);
    if (rank(basis) == basis.size()) {
      initial.push_back(i);
    } else {
      basis.pop_back();
    }
  }
  if (initial.size() < d) throw DegenerateCone("rays do not span a full-dimensional cone");

  using Key = std::vector<std::size_t>;
  struct FacetInfo {
    int count = 0;
    std::vector<Int> inward;  // normal pointing into the unique adjacent simplex
  };
  std::map<Key, FacetInfo> facets;
  std::vector<Key> simplices;

  auto add_simplex = [&](Key s) {
    std::sort(s.begin(), s.end());
    for (std::size_t j = 0; j < s.size(); ++j) {
      Key tau;
      for (std::size_t t = 0; t < s.size(); ++t)
        if (t != j) tau.push_back(s[t]);
      auto& info = facets[tau];
      if (++info.count == 1) {
        Matrix<Int> m;
        for (std::size_t idx : tau) m.push_back(rays[idx]);
        info.inward = cross_product(m);
        make_primitive(info.inward);
        if (dot(info.inward, rays[s[j]]) < 0)
          for (auto& x : info.inward) x = -x;
      }
    }
    simplices.push_back(std::move(s));
  };

  add_simplex(initial);
  std::vector<char> used(rays.size(), 0);
  for (std::size_t i : initial) used[i] = 1;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (used[i]) continue;
    std::vector<Key> visible;
    for (const auto& [tau, info] : facets)
      if (info.count == 1 && dot(info.inward, rays[i]) < 0) visible.push_back(tau);
    for (auto& tau : visible) {
      tau.push_back(i);
      add_simplex(std::move(tau));
    }
  }

  std::vector<SimplicialSubcone> out;
  out.reserve(simplices.size());
  for (const auto& s : simplices) {
    SimplicialSubcone sub;
    for (std::size_t idx : s) sub.rays.push_back(rays[idx]);
    sub.index = abs(determinant(sub.rays));
    out.push_back(std::move(sub));
  }
  return out;
}

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace detail

/// Lattice points sum_j l_j q_j with 0 <= l_j < 1, zero included; there are
/// exactly `index` of them.
///
/// The coefficient vectors l, scaled by the index D, form the group
/// Z^d / (Q Z^d) inside (Z/D)^d. It is generated by the images of the unit
/// vectors (columns of sign(det) * adj(Q) reduced mod D), so the points are
/// enumerated as the closure of {0} under those generators.
inline std::vector<LatticeVector> parallelepiped_points(const SimplicialSubcone& s) {
  const std::size_t d = s.rays.size();
  if (s.index < 1) throw DegenerateCone("parallelepiped of a degenerate subcone");
  const Int D = to_int(s.index);
  // q[i][j]: coordinate i of ray j.
  Matrix<Int> q(d, std::vector<Int>(d));
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) q[i][j] = s.rays[j][i];
  const BigInt det = determinant(q);
  const Int sign = det < 0 ? -1 : 1;

  // gens[i] = image of e_i: sign * adj(Q)[:, i] mod D.
  Matrix<Int> gens(d, std::vector<Int>(d));
  Matrix<Int> minor(d - 1, std::vector<Int>(d - 1));
  for (std::size_t row = 0; row < d; ++row) {
    for (std::size_t col = 0; col < d; ++col) {
      for (std::size_t r = 0, rr = 0; r < d; ++r) {
        if (r == row) continue;
        for (std::size_t c = 0, cc = 0; c < d; ++c) {
          if (c == col) continue;
          minor[rr][cc++] = q[r][c];
        }
        ++rr;
      }
      // adj(Q)[col][row] is the (row, col) cofactor.
      BigInt cof = d == 1 ? BigInt(1) : determinant(minor);
      if ((row + col) % 2 == 1) cof = -cof;
      BigInt g = (cof * sign) % D;
      if (g < 0) g += D;
      gens[row][col] = static_cast<Int>(g);
    }
  }

  std::unordered_set<std::vector<Int>, detail::VectorHash> seen;
  std::vector<std::vector<Int>> queue{std::vector<Int>(d, 0)};
  seen.insert(queue.front());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t e = 0; e < d; ++e) {
      std::vector<Int> next = queue[head];
      for (std::size_t j = 0; j < d; ++j) {
        next[j] += gens[e][j];
        if (next[j] >= D) next[j] -= D;
      }
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  if (static_cast<Int>(queue.size()) != D)
    throw Error("parallelepiped enumeration found " + std::to_string(queue.size()) + " points, expected " +
                std::to_string(D));

  std::vector<LatticeVector> points;
  points.reserve(queue.size());
  for (const auto& mu : queue) {
    LatticeVector p(d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc = checked_add(acc, checked_mul(q[i][j], mu[j]));
      p[i] = acc / D;
    }
    points.push_back(std::move(p));
  }
  std::sort(points.begin(), points.end());
  return points;
}

/// Minimal generating set of the monoid of lattice points of a cone.
struct HilbertBasis {
  std::size_t dim = 0;
  std::vector<LatticeVector> points;  // sorted by lattice_point_less
  bool truncated = false;

  std::vector<LatticeVector> degree_slice(Int k) const {
    std::vector<LatticeVector> out;
    for (const auto& p : points)
      if (p.back() == k) out.push_back(p);
    return out;
  }
};

struct HilbertBasisOptions {
  std::optional<Int> degree_cap;  // drop points of larger degree after reduction
  unsigned threads = 1;
};

/// Hilbert basis of a pointed cone contained in the non-negative orthant.
///
/// Candidates are the extreme rays together with the nonzero parallelepiped
/// points of every subcone; a candidate x is discarded when some other
/// candidate y has x - y in the cone.
inline HilbertBasis hilbert_basis(const ConeSystem& c, const HilbertBasisOptions& opts = {}) {
  const auto rays = extreme_rays(c);
  const auto subcones = triangulate(rays);

  std::vector<std::vector<LatticeVector>> per_cone(subcones.size());
  parallel_for(subcones.size(), opts.threads,
               [&](std::size_t i) { per_cone[i] = parallelepiped_points(subcones[i]); });

  std::set<LatticeVector> unique(rays.begin(), rays.end());
  for (auto& pts : per_cone)
    for (auto& p : pts)
      if (std::any_of(p.begin(), p.end(), [](Int x) { return x != 0; })) unique.insert(std::move(p));

  std::vector<LatticeVector> cand(unique.begin(), unique.end());
  std::vector<Int> weight(cand.size());
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (Int x : cand[i]) weight[i] = checked_add(weight[i], x);
  std::vector<std::size_t> order(cand.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return weight[a] != weight[b] ? weight[a] < weight[b] : cand[a] < cand[b];
  });

  // y can only reduce x when y <= x componentwise, hence has smaller coordinate sum.
  std::vector<char> irreducible(order.size(), 1);
  parallel_for(order.size(), opts.threads, [&](std::size_t pos) {
    const auto& x = cand[order[pos]];
    LatticeVector diff(x.size());
    for (std::size_t q = 0; q < pos; ++q) {
      const auto& y = cand[order[q]];
      if (weight[order[q]] == weight[order[pos]]) break;
      bool below = true;
      for (std::size_t i = 0; i < x.size() && below; ++i) {
        diff[i] = x[i] - y[i];
        below = diff[i] >= 0;
      }
      if (below && in_cone(c, diff)) {
        irreducible[pos] = 0;
        return;
      }
    }
  });

  HilbertBasis hb;
  hb.dim = c.dim;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (!irreducible[pos]) continue;
    const auto& x = cand[order[pos]];
    if (opts.degree_cap && x.back() > *opts.degree_cap) {
      hb.truncated = true;
      continue;
    }
    hb.points.push_back(x);
  }
  std::sort(hb.points.begin(), hb.points.end(), lattice_point_less);
  return hb;
}

}  // namespace vca
