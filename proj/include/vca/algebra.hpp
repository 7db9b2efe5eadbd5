#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/integer.hpp>

#include "vca/arith.hpp"
#include "vca/complex.hpp"
#include "vca/cone.hpp"
#include "vca/error.hpp"
#include "vca/monomial.hpp"

namespace vca {

/// d(A) < (n+1)^((n+3)/2) / 2^n, checked in squared integer form:
/// holds(d) iff d^2 * 4^n < (n+1)^(n+3).
class DegreeBound {
 public:
  explicit DegreeBound(Int n) : n_(n) {
    if (n < 1) throw InvalidArgument("degree bound needs n >= 1");
    lhs_scale_ = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n));
    rhs_ = boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n + 3));
  }

  Int n() const noexcept { return n_; }
  bool holds(Int d) const { return BigInt(d) * d * lhs_scale_ < rhs_; }

  /// Largest d with holds(d).
  BigInt largest_admissible() const {
    // d^2 < rhs / 4^n  <=>  d^2 <= ceil(rhs / 4^n) - 1
    BigInt q = (rhs_ + lhs_scale_ - 1) / lhs_scale_ - 1;
    return boost::multiprecision::sqrt(q);
  }

 private:
  Int n_;
  BigInt lhs_scale_;
  BigInt rhs_;
};

inline DegreeBound degree_bound(Int n) { return DegreeBound(n); }

/// |det| <= (n+1)^((n+1)/2) / 2^n for n x n (0,1)-matrices:
/// holds(v) iff v^2 * 4^n <= (n+1)^(n+1).
class DeterminantBound {
 public:
  explicit DeterminantBound(Int n) : n_(n) {
    if (n < 1) throw InvalidArgument("determinant bound needs n >= 1");
    lhs_scale_ = boost::multiprecision::pow(BigInt(4), static_cast<unsigned>(n));
    rhs_ = boost::multiprecision::pow(BigInt(n + 1), static_cast<unsigned>(n + 1));
  }

  Int n() const noexcept { return n_; }
  bool holds(const BigInt& v) const { return v * v * lhs_scale_ <= rhs_; }

  /// Largest v with holds(v).
  BigInt largest_admissible() const { return boost::multiprecision::sqrt(BigInt(rhs_ / lhs_scale_)); }

 private:
  Int n_;
  BigInt lhs_scale_;
  BigInt rhs_;
};

inline DeterminantBound fs_determinant_bound(Int n) { return DeterminantBound(n); }

inline constexpr Int kHardDegreeCap = 1'000'000;

struct GeneratorOptions {
  std::optional<Int> degree_cap;  // default: min(largest degree allowed by DegreeBound, 10^6)
  unsigned threads = 1;
};

inline Int default_degree_cap(std::size_t n) {
  const BigInt bound = degree_bound(static_cast<Int>(n)).largest_admissible();
  return bound > kHardDegreeCap ? kHardDegreeCap : static_cast<Int>(bound);
}

/// Minimal S-algebra generators of A(c): the positive-degree Hilbert basis
/// of the cover cone.
inline AlgebraPresentation generators(const WeightedComplex& c, const GeneratorOptions& opts = {}) {
  HilbertBasisOptions hb_opts;
  hb_opts.degree_cap = opts.degree_cap ? *opts.degree_cap : default_degree_cap(c.n());
  hb_opts.threads = opts.threads;
  const HilbertBasis hb = hilbert_basis(build_cone(c), hb_opts);
  AlgebraPresentation p;
  p.n = c.n();
  p.source = c;
  p.truncated = hb.truncated;
  for (const auto& pt : hb.points) {
    if (pt.back() == 0) continue;
    p.generators.push_back({ExponentVector(pt.begin(), pt.end() - 1), pt.back()});
  }
  std::sort(p.generators.begin(), p.generators.end(), cover_point_less);
  return p;
}

/// d(A): largest generator degree, 0 without generators.
inline Int max_degree(const AlgebraPresentation& p) {
  if (p.truncated) throw TruncatedPresentation("maximal degree unknown for a truncated presentation");
  Int d = 0;
  for (const auto& g : p.generators) d = std::max(d, g.k);
  return d;
}

/// A(c)^(m) realized as A(c with weights multiplied by m).
inline WeightedComplex veronese(const WeightedComplex& c, Int m) {
  if (m < 1) throw InvalidArgument("Veronese factor must be positive");
  std::vector<Int> w;
  for (Int x : c.weights()) w.push_back(checked_mul(x, m));
  return c.with_weights(std::move(w));
}

inline bool is_standard_graded(const WeightedComplex& c, const GeneratorOptions& opts = {}) {
  return max_degree(generators(c, opts)) <= 1;
}

struct VeroneseSearch {
  std::optional<Int> d;  // smallest d found, nullopt when none up to d_max
  Int verified_up_to = 0;  // equalities were checked for k = 1..verified_up_to only
};

/// Smallest d <= d_max with (cap_j I_j^d)^k = cap_j I_j^(dk) for k = 1..k_max.
inline VeroneseSearch find_veronese_d(const std::vector<MonomialIdeal>& ideals, Int k_max, Int d_max) {
  if (ideals.empty()) throw InvalidArgument("need at least one ideal");
  if (k_max < 1 || d_max < 1) throw InvalidArgument("search bounds must be positive");
  const std::size_t n = ideals.front().n();
  for (const auto& i : ideals)
    if (i.n() != n) throw DimensionMismatch("ideals live in different rings");
  auto intersection_of_powers = [&](Int e) {
    MonomialIdeal r = MonomialIdeal::unit(n);
    for (const auto& i : ideals) r = intersect(r, power(i, e));
    return r;
  };
  VeroneseSearch out;
  out.verified_up_to = k_max;
  for (Int d = 1; d <= d_max; ++d) {
    const MonomialIdeal base = intersection_of_powers(d);
    bool ok = true;
    MonomialIdeal pw = base;
    for (Int k = 2; k <= k_max && ok; ++k) {
      pw = multiply(pw, base);
      ok = pw == intersection_of_powers(checked_mul(d, k));
    }
    if (ok) {
      out.d = d;
      return out;
    }
  }
  return out;
}

struct GorensteinVerdict {
  bool gorenstein = false;
  std::vector<std::pair<int, Int>> stripped;  // zero-dimensional facets removed first
};

/// After removing zero-dimensional facets: w_F = |F| - 1 on every facet.
inline GorensteinVerdict is_gorenstein(const WeightedComplex& c) {
  StrippedComplex s = strip_zero_dim_facets(c);
  if (s.higher_empty) throw PreconditionViolation("every facet is a single vertex");
  GorensteinVerdict v;
  v.stripped = std::move(s.singletons);
  v.gorenstein = true;
  for (std::size_t i = 0; i < s.higher.size(); ++i)
    if (s.higher.weights()[i] != static_cast<Int>(s.higher.facets()[i].size()) - 1) v.gorenstein = false;
  return v;
}

struct PowerComparison {
  bool equal = false;
  std::optional<ExponentVector> witness;  // first generator of I^(k) outside I^k
};

inline PowerComparison compare_powers(const MonomialIdeal& ideal, Int k) {
  if (!ideal.is_squarefree()) throw NotSquarefree("power comparison needs a squarefree ideal");
  if (k < 1) throw InvalidArgument("power order must be positive");
  const MonomialIdeal ordinary = power(ideal, k);
  const MonomialIdeal symbolic = squarefree_symbolic_power(ideal, k);
  PowerComparison out;
  out.equal = ordinary == symbolic;
  if (!out.equal) {
    for (const auto& g : symbolic.generators()) {
      if (!ordinary.contains(g)) {
        out.witness = g;
        break;
      }
    }
  }
  return out;
}

}  // namespace vca
