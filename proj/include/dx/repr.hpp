/**
 * @file repr.hpp
 * @brief U_h(D(2,1;x)) at x = 1 acting on its six-dimensional supermodule M.
 *
 * Basis v_1, v_2 (even), v_3 .. v_6 (odd); indices in code are 0-based.
 * Generators E_i, F_i, H_i, i = 1..3, with E_1, F_1 odd. Cartan elements
 * act as K_i = q^{d_i H_i} on weight vectors (q = e^{h/2}).
 */

#pragma once

#include "dx/report.hpp"
#include "dx/superlinalg.hpp"

#include <array>

namespace dx {

inline constexpr int kRank = 3;
inline constexpr int kRoots = 7;
inline constexpr int kModuleDim = 6;

using IntMatrix3 = std::array<std::array<int, kRank>, kRank>;
using RationalMatrix3 = std::array<std::array<Rational, kRank>, kRank>;

/// Cartan data at x = 1.
struct CartanData {
  IntMatrix3 a;                // Cartan matrix
  std::array<int, kRank> d;    // symmetrizing diagonal
  IntMatrix3 abar;             // D A, symmetric
  RationalMatrix3 b;           // inverse of (-a_ij / d_j), drives the Cartan factor
};

const CartanData& cartan_data();

struct RootInfo {
  std::array<int, kRank> coords;  // in the simple-root basis
  Parity parity;
  int c;        // exponent c_i
  RatFunc phi;  // normalization phi_i
};

/// Roots beta_1 .. beta_7 (0-based array), ordered as in the R-matrix product.
const std::array<RootInfo, kRoots>& root_data();

/// (n)_i! for root index i in 1..7.
RatFunc root_q_factorial(int n, int root);

enum class Generator { E, F, H };
enum class RootSide { raise, lower };

/// Choice of H_2, H_3 eigenvalues on v_1, v_2. `corrected` sets them to 0,
/// which the [E_2, F_2] relation forces; `printed` keeps the value 1 from the
/// original action table so its inconsistency can be demonstrated.
enum class WeightTable { corrected, printed };

using Weight = std::array<int, kRank>;

class SixModule {
 public:
  explicit SixModule(WeightTable table = WeightTable::corrected);

  const SuperSpace& space() const { return space_; }
  const SuperSpace& square() const { return square_; }
  WeightTable table() const { return table_; }
  const std::array<Weight, kModuleDim>& weights() const { return weights_; }

  /// generator_action: 6x6 matrix of E_i, F_i or H_i (i = 1..3).
  const SuperMap& generator(Generator g, int i) const;
  /// K_i^{sign} (i = 1..3, sign = +-1).
  SuperMap cartan_exponential(int i, int sign) const;
  /// K_beta^{sign} for root beta_i (i = 1..7).
  SuperMap root_cartan(int root, int sign) const;
  /// E_{beta_i} (raise) or F_{beta_i} (lower), i = 1..7.
  const SuperMap& root_vector(int root, RootSide side) const;

  /// Action of Delta(g) on M (x) M.
  SuperMap coproduct(Generator g, int i) const;

 private:
  WeightTable table_;
  SuperSpace space_;
  SuperSpace square_;
  std::array<Weight, kModuleDim> weights_;
  std::array<SuperMap, kRank> e_, f_, h_;
  std::array<SuperMap, kRoots> e_root_, f_root_;
};

/// A (x) B acting on M (x) M with the Koszul sign (-1)^{|B||v|}.
SuperMap operator_pair(const SuperMap& a, const SuperMap& b);

/// Self-duality and the alpha-transported evaluation/coevaluation maps.
struct DualityMaps {
  SuperMap alpha;  // M -> M, alpha(v_i) expressed against the dual basis
  SuperMap b;      // unit -> M (x) M
  SuperMap d;      // M (x) M -> unit
};

DualityMaps duality_maps(const SixModule& m);

/// Defining relations, root-vector lemmas and the commutation table on M.
Report check_defining_relations(const SixModule& m);

}  // namespace dx
