#include "torsor/stability.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace torsor {

WeightedFiltration WeightedFiltration::make(std::vector<Int> gammas, std::vector<Int> ranks,
                                            std::vector<Rat> degrees, Rat total_deg) {
  if (gammas.empty() || gammas.size() != ranks.size())
    throw std::invalid_argument("WeightedFiltration: need matching nonempty gamma/rank lists");
  if (degrees.size() + 1 != gammas.size())
    throw std::invalid_argument("WeightedFiltration: need one degree per proper step");
  for (size_t i = 0; i + 1 < gammas.size(); ++i)
    if (!(gammas[i] < gammas[i + 1]))
      throw std::invalid_argument("WeightedFiltration: gammas must be strictly ascending");
  for (Int r : ranks)
    if (r < 1) throw std::invalid_argument("WeightedFiltration: ranks must be positive");
  WeightedFiltration f;
  f.gammas = std::move(gammas);
  f.ranks = std::move(ranks);
  f.degrees = std::move(degrees);
  f.total_deg = std::move(total_deg);
  return f;
}

Int WeightedFiltration::total_rank() const {
  Int n = 0;
  for (Int r : ranks) n += r;
  return n;
}

Int WeightedFiltration::rank_of_step(int i) const {
  Int n = 0;
  for (int j = 0; j <= i; ++j) n += ranks[static_cast<size_t>(j)];
  return n;
}

Rat WeightedFiltration::epsilon(int i) const {
  return Rat(gammas[static_cast<size_t>(i + 1)] - gammas[static_cast<size_t>(i)], total_rank());
}

WeightedFiltration filtration_shape(const OneParamSubgroup& lambda,
                                    const RepresentationWeights& rep) {
  if (rep.weights.empty())
    throw std::invalid_argument("filtration_shape: empty module");
  std::map<Int, Int> eig;  // eigenvalue -> multiplicity
  for (const IntVec& w : rep.weights) {
    if (w.size() != lambda.lambda.size())
      throw std::invalid_argument("filtration_shape: dimension mismatch");
    Int v = 0;
    for (Eigen::Index j = 0; j < w.size(); ++j) v += w(j) * lambda.lambda(j);
    eig[v] += 1;
  }
  std::vector<Int> gammas, ranks;
  for (const auto& [g, m] : eig) {
    gammas.push_back(g);
    ranks.push_back(m);
  }
  std::vector<Rat> degrees(gammas.size() - 1, Rat(0));
  return WeightedFiltration::make(std::move(gammas), std::move(ranks), std::move(degrees), Rat(0));
}

Rat schmitt_slope(const WeightedFiltration& f) {
  const Int n = f.total_rank();
  Rat acc(0);
  for (int i = 0; i < f.steps(); ++i)
    acc += f.epsilon(i) *
           (f.total_deg * Rat(f.rank_of_step(i)) - f.degrees[static_cast<size_t>(i)] * Rat(n));
  return acc;
}

Rat parabolic_schmitt_slope(const WeightedFiltration& f) { return schmitt_slope(f); }

namespace {
bool passes(const Rat& slope, Mode mode) {
  return mode == Mode::semistable ? slope >= Rat(0) : slope > Rat(0);
}
}  // namespace

Verdict char_scale_verdict(const Rat& slope, const Rat& r, Mode mode) {
  if (!(r > Rat(0)))
    throw std::invalid_argument("char_scale_verdict: scale must be positive");
  Verdict v;
  v.pass = passes(slope, mode);
  if (passes(r * slope, mode) != v.pass)
    throw std::logic_error("char_scale_verdict: scaling changed the verdict");
  v.witness_slope = slope;
  return v;
}

Verdict tf_semistability_verdict(const std::vector<WeightedFiltration>& filtrations, Mode mode) {
  Verdict v;
  if (filtrations.empty()) {
    v.pass = true;
    v.vacuous = true;
    return v;
  }
  v.pass = true;
  std::optional<Rat> worst;
  for (size_t i = 0; i < filtrations.size(); ++i) {
    Rat slope = parabolic_schmitt_slope(filtrations[i]);
    if (!passes(slope, mode)) v.pass = false;
    if (!worst || slope < *worst) {
      worst = slope;
      v.witness_index = static_cast<int>(i);
    }
  }
  if (v.pass) {
    v.witness_index.reset();
  } else {
    v.witness_slope = worst;
  }
  return v;
}

CounterexampleReport counterexample_gl2() {
  CounterexampleReport rep;
  rep.deg_L = 0;

  // Both rank-1 sheaves are degree 0 of maximal-ideal type; pulling back to
  // the normalization modulo torsion drops the degree by 1.
  Rank1NodalSheaf L{0, NodalType::maximal_ideal};
  Rank1NodalSheaf M{0, NodalType::maximal_ideal};
  rep.deg_L_prime = pullback_mod_torsion(L);
  rep.deg_M_prime = pullback_mod_torsion(M);

  // The line subbundles generated upstairs are the twists by both marked
  // points.
  rep.deg_L_saturated = rep.deg_L_prime + 2;
  rep.deg_M_saturated = rep.deg_M_prime + 2;

  // Tensor the two saturated lines, then undo one twist: the line that
  // descends.
  rep.deg_tensor = rep.deg_L_saturated + rep.deg_M_saturated;
  rep.deg_N = rep.deg_tensor - 2;

  // Descending the degree-0 line of maximal-ideal type gives the saturation
  // of the tensor subsheaf downstairs.
  rep.deg_saturation = descend_rank1(rep.deg_N, NodalType::maximal_ideal).deg_C;

  // One-step filtration of the rank-4 endomorphism sheaf by that subsheaf.
  rep.witness = WeightedFiltration::make({-1, 1}, {1, 3}, {Rat(rep.deg_saturation)}, Rat(0));
  rep.witness_slope = parabolic_schmitt_slope(rep.witness);
  rep.naive_test_fails = rep.deg_saturation > 0;
  return rep;
}

}  // namespace torsor
