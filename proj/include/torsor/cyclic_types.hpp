#ifndef TORSOR_CYCLIC_TYPES_HPP
#define TORSOR_CYCLIC_TYPES_HPP

#include <vector>

#include "torsor/root_datum.hpp"

namespace torsor {

/// A homomorphism from the cyclic group of order d into the maximal torus,
/// recorded by its type tuple (a_1..a_l) with entries reduced into [0, d).
struct CyclicType {
  Int d = 1;
  IntVec a;

  /// Reduces arbitrary integer entries into [0, d).
  static CyclicType make(Int d, IntVec a);

  int rank() const { return static_cast<int>(a.size()); }

  friend bool operator==(const CyclicType& x, const CyclicType& y) {
    return x.d == y.d && x.a.size() == y.a.size() && x.a == y.a;
  }
};

/// T-weights of a module, one integer vector per weight line. The pairing
/// convention is the caller's: `filtration_shape` pairs these against a
/// one-parameter subgroup in coroot coordinates (so entries are the pairings
/// <chi, alpha_j^vee>), while `push_type` pairs them against a type tuple in
/// coweight coordinates (so entries are simple-root coordinates there).
struct RepresentationWeights {
  std::vector<IntVec> weights;

  int dim() const { return static_cast<int>(weights.size()); }
};

/// The alcove-apartment weight of a type: coordinates a_j / d.
ApartmentPoint type_to_weight(const CyclicType& tau);

/// Balanced dual per the two-branch reversal formula: entries are sorted
/// ascending, then (with z leading zeros) the nonzero tail a_{z+1}..a_l maps
/// to (d - a_l, ..., d - a_{z+1}) behind the zeros. Involutive on sorted
/// tuples. The result is the sorted entrywise negation mod d.
CyclicType balanced_dual(const CyclicType& tau);

/// Entrywise negation mod d (no sorting): the local type seen at the second
/// marked point under the balanced action.
CyclicType entrywise_dual(const CyclicType& tau);

/// True when the homomorphism has full order d: the least m > 0 with
/// m · (the cocharacter of tau) in d · Y(T) is >= d, computed exactly from
/// the coroot-coordinate denominators. Coincides with
/// gcd(d, coroot coords) = 1 when those coordinates are integral.
bool is_injective(const RootDatum& rd, const CyclicType& tau);

/// Injective and every residue 1..d-1 occurs among the entries; forces
/// d <= rank + 1.
bool is_admissible(const RootDatum& rd, const CyclicType& tau);

/// Residues of the supplied weight vectors under the type: (w · a) mod d per
/// weight, the type data of the induced map into the general linear group of
/// the module. Vectors here are simple-root coordinates, so a simple root's
/// residue is its own type entry.
std::vector<Int> push_type(const CyclicType& tau, const RepresentationWeights& rep);

}  // namespace torsor

#endif  // TORSOR_CYCLIC_TYPES_HPP
