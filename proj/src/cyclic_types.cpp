#include "torsor/cyclic_types.hpp"

#include <algorithm>
#include <stdexcept>

namespace torsor {

CyclicType CyclicType::make(Int d, IntVec a) {
  if (d < 1) throw std::invalid_argument("CyclicType: d must be positive");
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    Int r = a(i) % d;
    if (r < 0) r += d;
    a(i) = r;
  }
  return CyclicType{d, std::move(a)};
}

ApartmentPoint type_to_weight(const CyclicType& tau) {
  RatVec c(tau.a.size());
  for (Eigen::Index i = 0; i < tau.a.size(); ++i) c(i) = Rat(tau.a(i), tau.d);
  return ApartmentPoint{c};
}

CyclicType balanced_dual(const CyclicType& tau) {
  std::vector<Int> s(tau.a.data(), tau.a.data() + tau.a.size());
  std::sort(s.begin(), s.end());
  size_t z = 0;
  while (z < s.size() && s[z] == 0) ++z;
  IntVec out(tau.a.size());
  for (size_t i = 0; i < z; ++i) out(static_cast<Eigen::Index>(i)) = 0;
  // Nonzero tail reversed and negated: dual stays sorted ascending.
  for (size_t i = z; i < s.size(); ++i)
    out(static_cast<Eigen::Index>(i)) = tau.d - s[s.size() - 1 - (i - z)];
  return CyclicType::make(tau.d, std::move(out));
}

CyclicType entrywise_dual(const CyclicType& tau) {
  IntVec out = -tau.a;
  return CyclicType::make(tau.d, std::move(out));
}

bool is_injective(const RootDatum& rd, const CyclicType& tau) {
  if (rd.rank() != tau.rank())
    throw std::invalid_argument("is_injective: rank mismatch");
  // Order = least m with m·v in d·Z^l, v the coroot coordinates of the
  // cocharacter; per entry that is the canonical denominator of v_i / d.
  RatVec v = rd.inv_cartan * to_rat(tau.a);
  mpz_class order = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class den = (v(i) / Rat(tau.d)).den();
    mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), den.get_mpz_t());
  }
  return order >= static_cast<long>(tau.d);
}

bool is_admissible(const RootDatum& rd, const CyclicType& tau) {
  std::vector<bool> hit(static_cast<size_t>(tau.d), false);
  for (Eigen::Index i = 0; i < tau.a.size(); ++i) hit[static_cast<size_t>(tau.a(i))] = true;
  for (Int r = 1; r < tau.d; ++r)
    if (!hit[static_cast<size_t>(r)]) return false;
  return is_injective(rd, tau);
}

std::vector<Int> push_type(const CyclicType& tau, const RepresentationWeights& rep) {
  std::vector<Int> residues;
  residues.reserve(rep.weights.size());
  for (const IntVec& w : rep.weights) {
    if (w.size() != tau.a.size())
      throw std::invalid_argument("push_type: weight dimension mismatch");
    Int s = 0;
    for (Eigen::Index j = 0; j < w.size(); ++j) s += w(j) * tau.a(j);
    s %= tau.d;
    if (s < 0) s += tau.d;
    residues.push_back(s);
  }
  return residues;
}

}  // namespace torsor
