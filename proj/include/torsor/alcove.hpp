#ifndef TORSOR_ALCOVE_HPP
#define TORSOR_ALCOVE_HPP

#include <map>
#include <vector>

#include "torsor/root_datum.hpp"

namespace torsor {

/// A facet of the fundamental alcove, indexed by the subset M of active
/// basic affine roots (0..rank). h_M = sum of marks over M (n_0 = 1);
/// the barycenter solves theta_i = 1/h_M on M and vanishes off M;
/// d_M is the least positive integer with d_M · barycenter in the coroot
/// lattice.
struct Facet {
  std::vector<int> M;
  Int h_M = 0;
  ApartmentPoint barycenter;
  Int d_M = 1;
};

/// Value of the affine root (r, n) at theta: pairing(theta, r) + n.
Rat affine_root_eval(const ApartmentPoint& theta, const IntVec& root, Int n);

/// Value of the j-th basic affine root, j in 0..rank. For j >= 1 this is the
/// simple root alpha_j; for j = 0 it is 1 - alpha_0 (alpha_0 the highest
/// root), so the rank+1 values never vanish simultaneously.
Rat basic_affine_root_eval(const RootDatum& rd, int j, const ApartmentPoint& theta);

/// Membership in the closed fundamental alcove: all basic affine roots >= 0.
bool in_alcove(const RootDatum& rd, const ApartmentPoint& theta);

/// The rank+1 alcove vertices; vertex 0 is the origin, vertex j is
/// alpha_j* / n_j.
std::vector<ApartmentPoint> alcove_vertices(const RootDatum& rd);

/// Facet data for a nonempty M subset of {0..rank}. Rejects empty or
/// out-of-range M.
Facet facet(const RootDatum& rd, const std::vector<int>& M);

/// Depth indices m_r = -floor(inf over theta of (theta, r)) for every root
/// r (positives then negatives, in root-generation order). Theta must be a
/// nonempty finite set.
std::vector<std::pair<IntVec, Int>> parahoric_indices(const RootDatum& rd,
                                                      const std::vector<ApartmentPoint>& Theta);

}  // namespace torsor

#endif  // TORSOR_ALCOVE_HPP
