/**
 * @file superlinalg.hpp
 * @brief Parity-graded free modules and homogeneous linear maps over RatFunc.
 *
 * Matrix convention: entry(r, c) is the coefficient of codomain basis vector
 * r in the image of domain basis vector c. Tensor bases are ordered
 * lexicographically in the factor indices (the last factor varies fastest).
 *
 * Koszul rule: (f (x) g)(v (x) w) = (-1)^{|g||v|} f(v) (x) g(w).
 */

#pragma once

#include "dx/ring.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dx {

using Parity = std::uint8_t;

class ShapeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class SuperSpace {
 public:
  SuperSpace() = default;
  explicit SuperSpace(std::vector<Parity> parities);

  /// The ground ring: one even basis vector.
  static SuperSpace unit() { return SuperSpace({0}); }

  std::size_t dim() const { return parities_.size(); }
  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }

  friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

 private:
  std::vector<Parity> parities_;
};

SuperSpace tensor(const SuperSpace& a, const SuperSpace& b);
/// m^{(x)k}; k = 0 gives the unit space.
SuperSpace tensor_power(const SuperSpace& m, int k);

using Vector = std::vector<RatFunc>;

class SuperMap {
 public:
  using Column = std::map<std::size_t, RatFunc>;

  SuperMap() = default;
  SuperMap(SuperSpace domain, SuperSpace codomain, Parity parity = 0);

  static SuperMap identity(const SuperSpace& space);
  static SuperMap scalar(const SuperSpace& space, const RatFunc& value);
  /// Diagonal even map with the given entries.
  static SuperMap diagonal(const SuperSpace& space, const std::vector<RatFunc>& entries);

  const SuperSpace& domain() const { return domain_; }
  const SuperSpace& codomain() const { return codomain_; }
  Parity parity() const { return parity_; }
  std::size_t rows() const { return codomain_.dim(); }
  std::size_t cols() const { return domain_.dim(); }

  RatFunc get(std::size_t r, std::size_t c) const;
  /// Throws ParityViolation for a nonzero entry outside the homogeneous blocks.
  void set(std::size_t r, std::size_t c, const RatFunc& value);
  void add_to(std::size_t r, std::size_t c, const RatFunc& value);

  const Column& column(std::size_t c) const { return columns_[c]; }
  std::size_t nonzeros() const;
  bool is_zero() const;

  SuperMap& operator+=(const SuperMap& o);
  SuperMap& operator-=(const SuperMap& o);
  SuperMap& operator*=(const RatFunc& s);
  friend SuperMap operator+(SuperMap a, const SuperMap& b) { return a += b; }
  friend SuperMap operator-(SuperMap a, const SuperMap& b) { return a -= b; }
  friend SuperMap operator*(SuperMap a, const RatFunc& s) { return a *= s; }
  friend SuperMap operator*(const RatFunc& s, SuperMap a) { return a *= s; }
  SuperMap operator-() const;

  /// Structural equality (same spaces, parity and entries).
  friend bool operator==(const SuperMap& a, const SuperMap& b);

  /// Entrywise substitution q -> 1.
  std::vector<std::vector<Rational>> at_one() const;

  /// Restriction to the given domain/codomain basis subsets (index lists in
  /// the order wanted for the result). The result is an even map over the
  /// induced parity lists.
  SuperMap block(const std::vector<std::size_t>& row_indices,
                 const std::vector<std::size_t>& col_indices) const;

 private:
  void check_entry(std::size_t r, std::size_t c) const;

  SuperSpace domain_;
  SuperSpace codomain_;
  Parity parity_ = 0;
  std::vector<Column> columns_;
};

/// f o g. Requires codomain(g) == domain(f).
SuperMap compose(const SuperMap& f, const SuperMap& g);
inline SuperMap operator*(const SuperMap& f, const SuperMap& g) { return compose(f, g); }

Vector apply(const SuperMap& f, const Vector& v);

/// Super commutator [a, b] = ab - (-1)^{|a||b|} ba.
SuperMap supercommutator(const SuperMap& a, const SuperMap& b);
/// q-bracket [a, b]_s = ab - (-1)^{|a||b|} s ba.
SuperMap qbracket(const SuperMap& a, const SuperMap& b, const RatFunc& s);

SuperMap tensor_map(const SuperMap& f, const SuperMap& g);

/// Graded flip m (x) n -> n (x) m, v (x) w |-> (-1)^{|v||w|} w (x) v.
SuperMap volte(const SuperSpace& m, const SuperSpace& n);

/// id^{(x)left} (x) f (x) id^{(x)right}, each identity acting on `factor`.
SuperMap embed_at(const SuperMap& f, int left, int right, const SuperSpace& factor);

/// Rank over the fraction field; Gaussian elimination, pivot = first nonzero
/// entry scanning columns left to right.
std::size_t rank_over_fractions(const SuperMap& f);

/// Exact inverse by Gauss-Jordan elimination. Throws std::domain_error if
/// the map is singular or not square.
SuperMap inverse(const SuperMap& f);

/// Positions of the even / odd basis vectors of a space, in order.
std::vector<std::size_t> parity_indices(const SuperSpace& s, Parity p);

}  // namespace dx
