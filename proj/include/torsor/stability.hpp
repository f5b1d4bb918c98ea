#ifndef TORSOR_STABILITY_HPP
#define TORSOR_STABILITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "torsor/cyclic_types.hpp"
#include "torsor/parabolic.hpp"

namespace torsor {

/// One-parameter subgroup of the fixed maximal torus, in coroot coordinates.
struct OneParamSubgroup {
  IntVec lambda;
};

/// Weighted filtration attached to a reduction datum: strictly ascending
/// eigenvalues gamma_1..gamma_{s+1}, block ranks r^1..r^{s+1} summing to the
/// total rank, the (parabolic) degrees of the s proper steps, and the total
/// degree. The step weights are eps_i = (gamma_{i+1} - gamma_i) / n.
struct WeightedFiltration {
  std::vector<Int> gammas;
  std::vector<Int> ranks;
  std::vector<Rat> degrees;  // deg of W_1..W_s (proper steps only)
  Rat total_deg;

  static WeightedFiltration make(std::vector<Int> gammas, std::vector<Int> ranks,
                                 std::vector<Rat> degrees, Rat total_deg);

  int steps() const { return static_cast<int>(degrees.size()); }
  Int total_rank() const;
  Int rank_of_step(int i) const;  // rank of W_{i+1..}: partial sums, i in 0..s-1
  Rat epsilon(int i) const;       // i in 0..s-1
};

enum class Mode { semistable, stable };

struct Verdict {
  bool pass = false;
  bool vacuous = false;
  std::optional<int> witness_index;   // most negative slope, ties by order
  std::optional<Rat> witness_slope;
};

/// Shape of the filtration induced by lambda on a module: eigenvalues are
/// the pairings of the supplied weight vectors with lambda (plain dot
/// product in coroot coordinates), sorted distinct; ranks their
/// multiplicities. lambda = 0 yields the single-block filtration (s = 0).
WeightedFiltration filtration_shape(const OneParamSubgroup& lambda,
                                    const RepresentationWeights& rep);

/// The weighted slope sum eps_i · (total_deg · rk W_i - deg W_i · n).
Rat schmitt_slope(const WeightedFiltration& f);

/// Same sum with the degrees read as parabolic degrees. The two coincide
/// when the parabolic structure is trivial; the separation in the API keeps
/// the caller honest about which degrees were supplied.
Rat parabolic_schmitt_slope(const WeightedFiltration& f);

/// Anti-dominant character rescaling: any such character is a positive
/// rational multiple r of the canonical one, so the verdict is the sign of
/// the slope, invariant under the scaling. Rejects r <= 0.
Verdict char_scale_verdict(const Rat& slope, const Rat& r, Mode mode);

/// Runs the slope test over a family of reduction-datum filtrations:
/// passes when every parabolic slope is >= 0 (semistable) resp. > 0
/// (stable); otherwise returns the witness of most negative slope. An empty
/// family passes vacuously with a warning flag.
Verdict tf_semistability_verdict(const std::vector<WeightedFiltration>& filtrations, Mode mode);

/// Step-by-step degree chain of the rank-2 counterexample on the nodal
/// curve: two non-free rank-1 sheaves of degree 0 whose tensor saturation
/// has degree 1, so the naive degree bound fails even though the ambient
/// bundle is semistable.
struct CounterexampleReport {
  Int deg_L = 0;                 // both rank-1 sheaves: degree 0, type m
  Int deg_L_prime = 0;           // pullback mod torsion on the normalization
  Int deg_M_prime = 0;
  Int deg_L_saturated = 0;       // after the +2 twist by the marked points
  Int deg_M_saturated = 0;
  Int deg_tensor = 0;            // product line bundle upstairs
  Int deg_N = 0;                 // after the -2 twist back
  Int deg_saturation = 0;        // descent of N: the degree-1 subsheaf
  WeightedFiltration witness;    // the one-step test filtration it induces
  Rat witness_slope;
  bool naive_test_fails = false; // degree-1 subsheaf violates the <= 0 bound
};

CounterexampleReport counterexample_gl2();

}  // namespace torsor

#endif  // TORSOR_STABILITY_HPP
