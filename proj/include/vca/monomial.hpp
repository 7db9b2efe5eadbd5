#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vca/arith.hpp"
#include "vca/error.hpp"

namespace vca {

/// Exponent vector of a monomial x1^a(1)...xn^a(n); entries are non-negative.
using ExponentVector = std::vector<Int>;

inline Int total_degree(const ExponentVector& v) {
  Int s = 0;
  for (Int e : v) s = checked_add(s, e);
  return s;
}

/// True iff x^a divides x^b (componentwise a <= b).
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/// Canonical generator order: ascending total degree, ties broken by the lex
/// order with x1 > x2 > ... > xn (so x1*x2 is listed before x1*x3).
inline bool canonical_less(const ExponentVector& a, const ExponentVector& b) {
  const Int da = total_degree(a);
  const Int db = total_degree(b);
  if (da != db) return da < db;
  return a > b;
}

inline ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline ExponentVector product(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

/// Exponents of x^a : x^b, i.e. max(a - b, 0).
inline ExponentVector quotient(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max<Int>(a[i] - b[i], 0);
  return r;
}

/// A monomial ideal in n variables, stored by its minimal generators.
///
/// The generator list is always an antichain under divisibility and sorted by
/// canonical_less, so two ideals are equal iff their generator lists are.
/// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n) : n_(n) {}

  /// Minimalizes `gens`. Throws DimensionMismatch on a wrong-length vector
  /// and InvalidArgument on a negative exponent.
  MonomialIdeal(std::size_t n, std::vector<ExponentVector> gens) : n_(n) {
    for (const auto& g : gens) {
      if (g.size() != n)
        throw DimensionMismatch("exponent vector of length " + std::to_string(g.size()) +
                                " in a ring with " + std::to_string(n) + " variables");
      for (Int e : g)
        if (e < 0) throw InvalidArgument("negative exponent");
    }
    std::sort(gens.begin(), gens.end(), canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (auto& g : gens) {
      const bool redundant = std::any_of(gens_.begin(), gens_.end(),
                                         [&](const ExponentVector& k) { return divides(k, g); });
      if (!redundant) gens_.push_back(std::move(g));
    }
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {ExponentVector(n, 0)}); }

  std::size_t n() const noexcept { return n_; }
  const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept {
    return gens_.size() == 1 && std::all_of(gens_[0].begin(), gens_[0].end(), [](Int e) { return e == 0; });
  }

  bool is_squarefree() const noexcept {
    for (const auto& g : gens_)
      for (Int e : g)
        if (e > 1) return false;
    return true;
  }

  bool contains(const ExponentVector& m) const {
    if (m.size() != n_) throw DimensionMismatch("monomial length does not match ideal");
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& g) { return divides(g, m); });
  }

  /// Ideal containment: every generator of `other` lies in *this.
  bool contains(const MonomialIdeal& other) const {
    if (other.n_ != n_) throw DimensionMismatch("ideals live in different rings");
    return std::all_of(other.gens_.begin(), other.gens_.end(),
                       [&](const ExponentVector& g) { return contains(g); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<ExponentVector> gens_;
};

inline MonomialIdeal minimalize(std::size_t n, std::vector<ExponentVector> vectors) {
  return MonomialIdeal(n, std::move(vectors));
}

namespace detail {
inline void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.n() != b.n())
    throw DimensionMismatch("ideals in " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                            " variables");
}
}  // namespace detail

inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  return a == b;
}

inline MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.n(), std::move(gens));
}

inline MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  return MonomialIdeal(a.n(), std::move(gens));
}

inline MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_ring(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(product(f, g));
  return MonomialIdeal(a.n(), std::move(gens));
}

/// I^k by binary exponentiation; I^0 is the unit ideal.
inline MonomialIdeal power(const MonomialIdeal& ideal, Int k) {
  if (k < 0) throw InvalidArgument("negative ideal power");
  MonomialIdeal result = MonomialIdeal::unit(ideal.n());
  MonomialIdeal base = ideal;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    k >>= 1;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

/// I : x^g, generated by max(f - g, 0) over the generators f of I.
inline MonomialIdeal colon(const MonomialIdeal& ideal, const ExponentVector& g) {
  if (g.size() != ideal.n()) throw DimensionMismatch("monomial length does not match ideal");
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& f : ideal.generators()) gens.push_back(quotient(f, g));
  return MonomialIdeal(ideal.n(), std::move(gens));
}

/// I : J as the intersection of I : g over the generators g of J.
inline MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_ring(i, j);
  if (j.is_zero()) throw UndefinedColon("colon by the zero ideal");
  MonomialIdeal result = colon(i, j.generators().front());
  for (std::size_t t = 1; t < j.size(); ++t) result = intersect(result, colon(i, j.generators()[t]));
  return result;
}

/// I : J^inf, the stable value of the ascending chain I, I:J, (I:J):J, ...
inline MonomialIdeal saturate(const MonomialIdeal& i, const MonomialIdeal& j) {
  MonomialIdeal current = i;
  for (;;) {
    MonomialIdeal next = colon(current, j);
    if (next == current) return current;
    current = std::move(next);
  }
}

/// k-th symbolic power of I with respect to J: I^k : J^inf.
inline MonomialIdeal symbolic_power_wrt(const MonomialIdeal& i, const MonomialIdeal& j, Int k) {
  detail::require_same_ring(i, j);
  if (k < 1) throw InvalidArgument("symbolic power order must be positive");
  if (j.is_zero()) throw UndefinedColon("saturation by the zero ideal");
  return saturate(power(i, k), j);
}

/// P_F^m: all monomials of degree m supported on the variables in `support`.
inline MonomialIdeal prime_power(std::size_t n, std::span<const int> support, Int m) {
  if (m < 0) throw InvalidArgument("negative prime power");
  std::vector<ExponentVector> gens;
  if (support.empty()) {
    if (m == 0) gens.emplace_back(n, 0);
    return MonomialIdeal(n, std::move(gens));
  }
  ExponentVector v(n, 0);
  // Weak compositions of m into |support| parts, last part takes the remainder.
  auto rec = [&](auto&& self, std::size_t pos, Int remaining) -> void {
    const int var = support[pos];
    if (pos + 1 == support.size()) {
      v[var] = remaining;
      gens.push_back(v);
      v[var] = 0;
      return;
    }
    for (Int e = remaining; e >= 0; --e) {
      v[var] = e;
      self(self, pos + 1, remaining - e);
    }
    v[var] = 0;
  };
  rec(rec, 0, m);
  return MonomialIdeal(n, std::move(gens));
}

}  // namespace vca
