#ifndef TORSOR_CHARTS_HPP
#define TORSOR_CHARTS_HPP

#include <string>
#include <vector>

#include "torsor/linalg.hpp"

namespace torsor {

/// Monomial (Laurent) map between coordinate charts, recorded by its
/// exponent matrix: target_i = prod_j source_j ^ E(i,j). Composition is
/// matrix multiplication; the identity map is the identity matrix.
struct MonomialMap {
  IntMat exponents;  // rows = target coordinates, cols = source coordinates

  int source_arity() const { return static_cast<int>(exponents.cols()); }
  int target_arity() const { return static_cast<int>(exponents.rows()); }

  MonomialMap after(const MonomialMap& first) const {
    if (first.target_arity() != source_arity())
      throw std::invalid_argument("MonomialMap: arity mismatch in composition");
    return MonomialMap{exponents * first.exponents};
  }

  static MonomialMap identity(int arity) { return MonomialMap{IntMat::Identity(arity, arity)}; }

  bool unimodular() const {
    Rat det = exact_det(exponents);
    return det == Rat(1) || det == Rat(-1);
  }
};

/// Chart change ell -> ell+1 on the (d+1)-coordinate cover of the special
/// degeneration total space: the three coordinates at positions ell, ell+1,
/// ell+2 transform by (u_ell·u_{ell+1}, 1/u_{ell+1}, u_{ell+1}·u_{ell+2}),
/// the rest are fixed. 1 <= ell <= d-1.
MonomialMap degeneration_transition(Int ell, Int d);

/// Chart change on the 2-coordinate cover of the minimal resolution:
/// (a, b) -> (a^2 b, 1/a), exponent matrix [[2,1],[-1,0]].
MonomialMap resolution_transition();

/// The two chart maps from the 3-coordinate d=2 degeneration cover onto the
/// resolution cover: ell = 1 sends (u1,u2,u3) to (u2, u1·u3), ell = 2 sends
/// them to (u1·u3, u2).
MonomialMap resolution_embedding(Int ell);

/// Per-chart torus weight matrices for the rank-d torus action on the
/// (d+1)-coordinate charts, charts ell = 1..d. Convention sigma_0 =
/// sigma_d = 1, so the last torus column is identically zero. Rows are
/// coordinates, columns torus factors.
std::vector<IntMat> gm_action(Int d);

/// Transition of the doubled tautological-line-bundle chart:
/// (b, z1, z2) -> (1/b, z1·b, z2·b).
MonomialMap line_bundle_transition();

/// Classification of a bidegree matrix (rows = chain components, cols =
/// rank) against the chain-bundle bounds: standard means all entries in
/// {0,1}; strictly standard additionally needs a 1 in every row. Direct-image
/// torsion-freeness is outside the numerical scope and reported as
/// unchecked.
struct ChainBundleReport {
  bool standard = false;
  bool strictly_standard = false;
  std::vector<std::pair<int, int>> violations;  // offending (row, col)
  std::string torsion_free_note = "not checked";
};

ChainBundleReport chain_bundle_check(const IntMat& bidegrees);

}  // namespace torsor

#endif  // TORSOR_CHARTS_HPP
