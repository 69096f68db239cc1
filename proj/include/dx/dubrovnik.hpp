/**
 * @file dubrovnik.hpp
 * @brief Unoriented Dubrovnik polynomial by the switching recursion, used as
 * an independent oracle for the tangle evaluator.
 *
 * Normalization: the trivial circle is 1, a positive curl multiplies by a,
 *   D(X) - D(X') = z (D(=) - D(||)),
 * with delta = (a - a^{-1}) / z + 1 per extra split component.
 */

#pragma once

#include "dx/ring.hpp"
#include "dx/tangle.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dx {

/// A diagram given by crossings only. Each crossing lists the four incident
/// edge labels counterclockwise, starting from an under-strand end: slots 0
/// and 2 are the under strand, 1 and 3 the over strand. Every label occurs
/// exactly twice. Crossing-free components are counted in free_loops.
struct LinkGraph {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  /// Throws DiagramError unless every label occurs exactly twice.
  void validate() const;
  int components() const;
  /// Sum of crossing signs between strands of the same component (any
  /// orientation gives the same value).
  int self_writhe() const;
};

LinkGraph link_graph(const SlicedDiagram& d);
LinkGraph braid_closure_graph(const BraidWord& b);

class RecursionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Laurent polynomial in a, z with rational coefficients.
class TwoVarPoly {
 public:
  using Key = std::pair<int, int>;  // (a exponent, z exponent)
  using Terms = std::map<Key, Rational>;

  TwoVarPoly() = default;
  TwoVarPoly(long c);  // NOLINT(google-explicit-constructor)
  static TwoVarPoly monomial(const Rational& c, int a_exp, int z_exp);
  static TwoVarPoly a() { return monomial(1, 1, 0); }
  static TwoVarPoly z() { return monomial(1, 0, 1); }
  /// (a - a^{-1}) z^{-1} + 1
  static TwoVarPoly delta();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int a_exp, int z_exp, const Rational& c);

  TwoVarPoly& operator+=(const TwoVarPoly& o);
  TwoVarPoly& operator-=(const TwoVarPoly& o);
  friend TwoVarPoly operator+(TwoVarPoly x, const TwoVarPoly& y) { return x += y; }
  friend TwoVarPoly operator-(TwoVarPoly x, const TwoVarPoly& y) { return x -= y; }
  friend TwoVarPoly operator*(const TwoVarPoly& x, const TwoVarPoly& y);
  TwoVarPoly pow(int n) const;  // n >= 0
  friend bool operator==(const TwoVarPoly&, const TwoVarPoly&) = default;

 private:
  Terms terms_;
};

/// Terms in ascending (a, z) order, e.g. `-a^-1*z + 2*a^2`.
std::string to_string(const TwoVarPoly& p);

struct DubrovnikOptions {
  bool memo = true;
  /// Largest crossing count accepted; <= 0 means the default (16, or the
  /// DXLINK_CROSSING_LIMIT environment variable when set).
  int crossing_limit = 0;
};

struct DubrovnikStats {
  std::size_t calls = 0;
  std::size_t memo_hits = 0;
};

TwoVarPoly dubrovnik_poly(const LinkGraph& g, const DubrovnikOptions& opt = {},
                          DubrovnikStats* stats = nullptr);

/// a -> -q^{-1}, z -> q - q^{-1}.
IntLaurent specialize(const TwoVarPoly& p);

struct SkeinComparison {
  IntLaurent tangle;    // tangle evaluation of the closure
  TwoVarPoly dubrovnik;
  IntLaurent expected;  // 2 * specialize(dubrovnik)
  bool agrees() const { return tangle == expected; }
};

SkeinComparison compare(const BraidWord& b, const Category& cat = standard_category());

}  // namespace dx
