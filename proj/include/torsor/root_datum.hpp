#ifndef TORSOR_ROOT_DATUM_HPP
#define TORSOR_ROOT_DATUM_HPP

#include <string>
#include <vector>

#include "torsor/linalg.hpp"

namespace torsor {

/// A simple Lie type, e.g. A3, G2, E8. Bourbaki node numbering throughout:
/// B_l has alpha_l short, C_l has alpha_l long, G_2 has alpha_1 short,
/// F_4 has alpha_1, alpha_2 long.
struct LieType {
  char family = 'A';  // A, B, C, D, E, F, G
  int rank = 1;

  static LieType parse(const std::string& label);
  std::string str() const { return std::string(1, family) + std::to_string(rank); }

  friend bool operator==(const LieType& a, const LieType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

/// A rational point of the apartment, in fundamental-coweight coordinates
/// (x_j = pairing with the simple root alpha_j). Immutable value type.
struct ApartmentPoint {
  RatVec coords;

  int rank() const { return static_cast<int>(coords.size()); }
  static ApartmentPoint zero(int rank) { return {RatVec::Zero(rank)}; }

  friend bool operator==(const ApartmentPoint& a, const ApartmentPoint& b) {
    return a.coords.size() == b.coords.size() && a.coords == b.coords;
  }
};

/// Exact combinatorial data of a simple root system.
///
/// positive_roots are integer coordinate vectors in the simple-root basis;
/// highest_root_coeffs are the marks n_j of the highest root; inv_cartan is
/// the exact rational inverse of the Cartan matrix; center_exponent is the
/// exponent of the coweight/coroot quotient (the lcm of the denominators
/// appearing in inv_cartan).
struct RootDatum {
  LieType lie_type;
  IntMat cartan;                  // l x l, C_ij = <alpha_i, alpha_j^vee>
  std::vector<IntVec> positive_roots;
  IntVec highest_root_coeffs;     // n_1..n_l
  Int coxeter_number = 0;         // sum n_j + 1
  RatMat inv_cartan;
  Int center_exponent = 1;

  int rank() const { return lie_type.rank; }

  /// n_j with the affine convention n_0 = 1; valid for j in 0..rank.
  Int mark(int j) const { return j == 0 ? 1 : highest_root_coeffs(j - 1); }
};

/// Builds the full datum for a parsed label ("A1".."A*", "B2".., "C2"..,
/// "D3".., "E6".."E8", "F4", "G2"). Positive roots are generated from the
/// Cartan matrix by root-string closure, not tabulated.
RootDatum build_root_datum(const LieType& type);
inline RootDatum build_root_datum(const std::string& label) {
  return build_root_datum(LieType::parse(label));
}

/// Pairing (theta, r) of an apartment point with a root given in simple-root
/// coordinates: by <alpha_i, alpha_j*> = delta_ij this is sum m_j(r)·x_j.
Rat pairing(const ApartmentPoint& theta, const IntVec& root);

/// Coordinates of theta in the coroot basis: inv_cartan · coords. Entries are
/// all integral exactly when theta lies in the coroot lattice Y(T).
RatVec to_coroot_coords(const RootDatum& rd, const ApartmentPoint& theta);

}  // namespace torsor

#endif  // TORSOR_ROOT_DATUM_HPP
