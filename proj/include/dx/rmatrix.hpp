/**
 * @file rmatrix.hpp
 * @brief The universal R-matrix evaluated on M (x) M, the braiding c = tau R,
 * the twist, and their verification suites.
 *
 * R is the ordered product exp_1 ... exp_7 followed by the Cartan factor;
 * as an operator the Cartan factor acts first, then exp_7, ..., exp_1.
 */

#pragma once

#include "dx/repr.hpp"

#include <functional>
#include <string>
#include <vector>

namespace dx {

/// Truncated series sum_n (E_b^n (x) F_b^n) / ((n)_i! phi_i^n) on M (x) M,
/// root index i in 1..7. Throws std::logic_error if E_b^7 != 0.
SuperMap exp_factor(const SixModule& m, int root);

/// v (x) w |-> q^{sum_ij b_ij lambda_i mu_j} v (x) w.
SuperMap cartan_factor(const SixModule& m);

SuperMap r_matrix(const SixModule& m);

struct BraidingBundle {
  SuperMap r;
  SuperMap c;
  SuperMap c_inv;
  RatFunc theta;  // twist scalar on M
};

/// Builds R, c and c^{-1}; theta is filled by twist().
BraidingBundle braiding(const SixModule& m);

/// theta^{-2} = (d_M c_{M,M*} (x) id)(id (x) c_{M,M*} b_M) computed with M*
/// realized on the dual basis. Returns theta with theta(1) = 1; throws
/// std::logic_error if theta^{-2} is not a scalar square.
RatFunc twist(const SixModule& m, const BraidingBundle& bundle);
/// The matrix theta^{-2} itself (for inspection and tests).
SuperMap inverse_twist_squared(const SixModule& m, const BraidingBundle& bundle);

/// Braiding, twist and duality maps, built once and shared.
struct Category {
  SixModule module;
  BraidingBundle braid;
  DualityMaps duality;
};

/// Lazily built shared instance for the corrected module.
const Category& standard_category();

Report spectral_check(const BraidingBundle& bundle);
/// Skein, loop value, curl, zig-zags, twist, b' and d', naturality against
/// the coproduct, d/b invariance, c c^{-1} = id.
Report category_check(const Category& cat);
/// (c (x) id)(id (x) c)(c (x) id) = (id (x) c)(c (x) id)(id (x) c) on M^{(x)3}.
Report yang_baxter_check(const Category& cat,
                         const std::function<void(const std::string&)>& progress = {});

/// Basis orders of the reference blocks: pairs (i, j) of 0-based indices
/// flattened to 6 i + j.
std::vector<std::size_t> even_block_basis();
std::vector<std::size_t> odd_block_basis();

struct Deviation {
  std::string block;  // "c0" or "c1"
  std::size_t row, col;
  std::string printed;
  std::string computed;
};

/// Entry-by-entry comparison with the reference blocks.
struct ReferenceComparison {
  std::size_t entries = 0;
  std::size_t matches = 0;
  std::vector<Deviation> deviations;
  double match_ratio() const { return entries ? double(matches) / double(entries) : 0.0; }
};

ReferenceComparison compare_with_printed(const BraidingBundle& bundle);
/// Text file body listing each deviation, one per line.
std::string render_deviations(const ReferenceComparison& cmp);

/// Integrality, classical limit, reference comparison and the structural
/// checks on R and c.
Report rmatrix_check(const Category& cat);

}  // namespace dx
