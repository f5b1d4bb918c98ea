#include "torsor/parabolic.hpp"

#include <stdexcept>

namespace torsor {

BalancedWeights BalancedWeights::make(std::vector<Rat> alpha, std::vector<Int> k) {
  if (alpha.empty() || alpha.size() != k.size())
    throw std::invalid_argument("BalancedWeights: need matching nonempty weight/multiplicity lists");
  for (size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] < Rat(0) || alpha[i] >= Rat(1))
      throw std::invalid_argument("BalancedWeights: weights must lie in [0,1)");
    if (i > 0 && !(alpha[i - 1] < alpha[i]))
      throw std::invalid_argument("BalancedWeights: weights must be strictly ascending");
    if (k[i] < 1) throw std::invalid_argument("BalancedWeights: multiplicities must be positive");
  }
  BalancedWeights w;
  w.alpha = std::move(alpha);
  w.k = std::move(k);
  return w;
}

Int BalancedWeights::total_rank() const {
  Int n = 0;
  for (Int m : k) n += m;
  return n;
}

std::vector<Rat> dual_weights(const BalancedWeights& w) {
  const int s = w.steps();
  std::vector<Rat> beta(static_cast<size_t>(s));
  if (w.alpha.front() != Rat(0)) {
    for (int m = 0; m < s; ++m) beta[static_cast<size_t>(m)] = Rat(1) - w.alpha[static_cast<size_t>(s - 1 - m)];
  } else {
    beta[0] = Rat(0);
    for (int m = 1; m < s; ++m) beta[static_cast<size_t>(m)] = Rat(1) - w.alpha[static_cast<size_t>(s - m)];
  }
  return beta;
}

Rat par_deg(const LacedBundleData& b) {
  const BalancedWeights& w = b.weights;
  const Int n = w.total_rank();
  const bool zero_least = (w.alpha.front() == Rat(0));

  // Definitional route: weight sums at both points, the zero-weight terms
  // dropping out of both when the least weight is zero.
  Rat sum(0);
  for (int m = zero_least ? 1 : 0; m < w.steps(); ++m) {
    const Rat& a = w.alpha[static_cast<size_t>(m)];
    sum += Rat(w.k[static_cast<size_t>(m)]) * a;
    sum += Rat(w.k[static_cast<size_t>(m)]) * (Rat(1) - a);
  }
  Rat definitional = Rat(b.deg) + sum;

  Int l = zero_least ? n - w.k.front() : n;
  Rat closed = Rat(b.deg) + Rat(l);

  if (definitional != closed)
    throw std::logic_error("par_deg: definitional sum and closed form disagree");
  return closed;
}

Rank1NodalSheaf descend_rank1(Int deg_Y, NodalType local_type) {
  Int l = (local_type == NodalType::maximal_ideal) ? 1 : 0;
  return Rank1NodalSheaf{deg_Y + l, local_type};
}

Int pullback_mod_torsion(const Rank1NodalSheaf& s) {
  Int l = (s.local_type == NodalType::maximal_ideal) ? 1 : 0;
  return s.deg_C - l;
}

}  // namespace torsor
