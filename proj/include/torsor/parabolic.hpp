#ifndef TORSOR_PARABOLIC_HPP
#define TORSOR_PARABOLIC_HPP

#include <vector>

#include "torsor/linalg.hpp"

namespace torsor {

/// Balanced parabolic weight data at the two marked points: strictly
/// ascending weights in [0,1) with positive multiplicities; n is the total
/// rank. The dual weights at the second point are determined by the
/// reversal formula, see dual_weights.
struct BalancedWeights {
  std::vector<Rat> alpha;
  std::vector<Int> k;

  static BalancedWeights make(std::vector<Rat> alpha, std::vector<Int> k);

  int steps() const { return static_cast<int>(alpha.size()); }
  Int total_rank() const;
};

/// A bundle on the doubly marked normalization with balanced parabolic
/// structure and graded identifications between the marked fibers. The
/// identifications carry no degree information, so only their arity is
/// kept: full (= steps) or 1 (the torsion-free-sheaf case).
struct LacedBundleData {
  Int deg = 0;
  BalancedWeights weights;
  int lacing_arity = 1;
};

/// Local shape of a rank-1 torsion-free sheaf at the node.
enum class NodalType { free, maximal_ideal };

struct Rank1NodalSheaf {
  Int deg_C = 0;
  NodalType local_type = NodalType::free;
};

/// Dual weights: (1-a_s, ..., 1-a_1) when a_1 != 0, and
/// (0, 1-a_s, ..., 1-a_2) when a_1 = 0. Involutive.
std::vector<Rat> dual_weights(const BalancedWeights& w);

/// Parabolic degree. Evaluates both the definitional weight sum and the
/// closed form deg + l (l = n when the least weight is nonzero, n - k_1
/// otherwise) and insists they agree; a mismatch is an internal error, not
/// a user error.
Rat par_deg(const LacedBundleData& b);

/// Degree bookkeeping of descent to the nodal curve: deg_C = deg_Y + l with
/// l = 1 for the maximal-ideal type, 0 for free.
Rank1NodalSheaf descend_rank1(Int deg_Y, NodalType local_type);

/// Inverse bookkeeping: degree of the pullback modulo torsion, deg_C - l.
Int pullback_mod_torsion(const Rank1NodalSheaf& s);

}  // namespace torsor

#endif  // TORSOR_PARABOLIC_HPP
