#ifndef TORSOR_MCKAY_HPP
#define TORSOR_MCKAY_HPP

#include <vector>

#include "torsor/linalg.hpp"

namespace torsor {

/// Invariant-section generators of the character-s eigensheaf on the plane:
/// the monomial pair (u^{u_exp}, v^{v_exp}) = (u^s, v^{d-s}).
struct MonomialPair {
  Int u_exp = 0;
  Int v_exp = 0;
};

/// Pushed-down ideal presentation (x, t^{t_exp}) in the coordinates
/// x = u^d, y = v^d, t = uv of the base singularity.
struct IdealPresentation {
  Int t_exp = 0;
};

/// Character <-> exceptional-component dictionary for the cyclic A-type
/// singularity of order d: row s-1 describes the nontrivial character s.
struct McKayData {
  Int d = 2;
  std::vector<MonomialPair> generators;     // for s = 1..d-1
  std::vector<IdealPresentation> ideals;    // for s = 1..d-1
  IntMat pairing_matrix;                    // c_1(L_s) . R_j, the identity
  IntMat chain_intersection;                // A_{d-1} graph: -2 diag, 1 adj
};

/// (u^s, v^{d-s}); rejects s outside 1..d-1 (the trivial character has no
/// eigensheaf here).
MonomialPair invariant_generators(Int s, Int d);

/// (x, t^{d-s}); same range restriction.
IdealPresentation ideal_presentation(Int s, Int d);

/// Full dictionary for order d >= 2 under the labeling that matches
/// character s with component R_s.
McKayData mckay_data(Int d);

/// The (d-1)x(d-1) intersection pairing of the character line bundles with
/// the components: the identity matrix.
IntMat mckay_matrix(Int d);

/// Intersection matrix of the exceptional chain itself.
IntMat chain_intersection_matrix(Int d);

}  // namespace torsor

#endif  // TORSOR_MCKAY_HPP
