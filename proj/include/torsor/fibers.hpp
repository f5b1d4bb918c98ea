#ifndef TORSOR_FIBERS_HPP
#define TORSOR_FIBERS_HPP

#include <map>
#include <string>
#include <vector>

#include "torsor/cyclic_types.hpp"

namespace torsor {

/// Coefficients of a closed-alcove point on the alcove vertices:
/// c_j = n_j · theta_j(theta) for j = 0..rank, nonnegative with sum 1, and
/// theta = sum c_j · vertex_j (vertex 0 the origin).
struct BarycentricCoords {
  RatVec c;  // indices 0..rank
};

/// Complete weight assignment on the closed fiber attached to a type: the
/// two outer affine-line branches carry the constant group, the d-1 chain
/// components carry the character weights in chain order, and the d nodes
/// carry [theta at y_1, the d-2 internal node weights, the dual weight at
/// y_2]. For d = 1 there is no chain and the single node entry is theta
/// itself.
struct FiberDescription {
  CyclicType tau;
  std::string left_branch = "G";              // constant group on the outer branches
  std::string right_branch = "G";
  std::vector<ApartmentPoint> chain_weights;  // size d-1
  std::vector<ApartmentPoint> node_weights;   // size d
  /// Grouped coefficient values had ties; the ascending order used for the
  /// internal node weights then broke ties by residue.
  bool tied_groups = false;
};

/// Decomposes a closed-alcove point over the vertices. Rejects points
/// outside the closed alcove (some coefficient would leave [0, 1]).
BarycentricCoords barycentric(const RootDatum& rd, const ApartmentPoint& theta);

/// Groups the extended index set {0..rank} by character residue: index
/// j >= 1 by a_j, and the affine index 0 by (-sum n_j a_j) mod d, the
/// residue carried by the extra node of the extended diagram. Requires an
/// injective type.
std::map<Int, std::vector<int>> group_characters(const RootDatum& rd, const CyclicType& tau);

/// Runs the fiber-weight algorithm. Requires tau admissible with
/// type_to_weight(tau) in the closed alcove; rejections carry the reason
/// (non-injective, the missing residue, or the weight outside the alcove).
FiberDescription fiber_description(const RootDatum& rd, const CyclicType& tau);

}  // namespace torsor

#endif  // TORSOR_FIBERS_HPP
