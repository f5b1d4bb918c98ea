#include "torsor/fibers.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsor/alcove.hpp"

namespace torsor {

BarycentricCoords barycentric(const RootDatum& rd, const ApartmentPoint& theta) {
  if (theta.rank() != rd.rank())
    throw std::invalid_argument("barycentric: rank mismatch");
  RatVec c(rd.rank() + 1);
  Rat sum(0);
  for (int j = 0; j <= rd.rank(); ++j) {
    Rat v = Rat(rd.mark(j)) * basic_affine_root_eval(rd, j, theta);
    if (v < Rat(0))
      throw std::invalid_argument("barycentric: point outside the closed alcove");
    c(j) = v;
    sum += v;
  }
  if (sum != Rat(1))
    throw std::logic_error("barycentric: coefficients do not sum to 1");
  return BarycentricCoords{c};
}

std::map<Int, std::vector<int>> group_characters(const RootDatum& rd, const CyclicType& tau) {
  if (rd.rank() != tau.rank())
    throw std::invalid_argument("group_characters: rank mismatch");
  if (!is_injective(rd, tau))
    throw std::invalid_argument("group_characters: type is not injective");
  std::map<Int, std::vector<int>> groups;
  Int e0 = 0;
  for (int j = 1; j <= rd.rank(); ++j) {
    groups[tau.a(j - 1)].push_back(j);
    e0 -= rd.mark(j) * tau.a(j - 1);
  }
  e0 %= tau.d;
  if (e0 < 0) e0 += tau.d;
  groups[e0].push_back(0);
  for (auto& [res, idx] : groups) std::sort(idx.begin(), idx.end());
  return groups;
}

FiberDescription fiber_description(const RootDatum& rd, const CyclicType& tau) {
  if (rd.rank() != tau.rank())
    throw std::invalid_argument("fiber_description: rank mismatch");
  if (!is_injective(rd, tau))
    throw std::invalid_argument("fiber_description: type is not injective");
  for (Int r = 1; r < tau.d; ++r) {
    bool hit = false;
    for (Eigen::Index i = 0; i < tau.a.size(); ++i)
      if (tau.a(i) == r) hit = true;
    if (!hit)
      throw std::invalid_argument("fiber_description: type not admissible, residue " +
                                  std::to_string(r) + " missing");
  }

  ApartmentPoint theta = type_to_weight(tau);
  BarycentricCoords bc = barycentric(rd, theta);  // rejects weights off the alcove
  const int l = rd.rank();
  const Int d = tau.d;

  FiberDescription fd;
  fd.tau = tau;
  if (d == 1) {
    fd.node_weights.push_back(theta);
    return fd;
  }

  auto groups = group_characters(rd, tau);
  std::vector<ApartmentPoint> vertices = alcove_vertices(rd);

  // Per nontrivial residue t: the weighted vertex sum (the component weight),
  // the plain vertex sum, and the total coefficient c(t).
  std::vector<ApartmentPoint> weighted(static_cast<size_t>(d));
  std::vector<ApartmentPoint> plain(static_cast<size_t>(d));
  std::vector<Rat> ctotal(static_cast<size_t>(d), Rat(0));
  for (Int t = 0; t < d; ++t) {
    weighted[static_cast<size_t>(t)] = ApartmentPoint::zero(l);
    plain[static_cast<size_t>(t)] = ApartmentPoint::zero(l);
  }
  for (const auto& [t, idx] : groups) {
    for (int j : idx) {
      weighted[static_cast<size_t>(t)].coords += bc.c(j) * vertices[static_cast<size_t>(j)].coords;
      plain[static_cast<size_t>(t)].coords += vertices[static_cast<size_t>(j)].coords;
      ctotal[static_cast<size_t>(t)] += bc.c(j);
    }
  }

  for (Int t = 1; t < d; ++t)
    fd.chain_weights.push_back(weighted[static_cast<size_t>(t)]);

  // Ascending order of the nontrivial group coefficients; ties broken by
  // residue and flagged.
  std::vector<Int> order;
  for (Int t = 1; t < d; ++t) order.push_back(t);
  std::stable_sort(order.begin(), order.end(), [&](Int x, Int y) {
    return ctotal[static_cast<size_t>(x)] < ctotal[static_cast<size_t>(y)];
  });
  for (size_t i = 0; i + 1 < order.size(); ++i)
    if (ctotal[static_cast<size_t>(order[i])] == ctotal[static_cast<size_t>(order[i + 1])])
      fd.tied_groups = true;

  fd.node_weights.push_back(theta);
  for (Int s = 1; s <= d - 2; ++s) {
    ApartmentPoint w = ApartmentPoint::zero(l);
    const Rat& cs = ctotal[static_cast<size_t>(order[static_cast<size_t>(s - 1)])];
    for (Int k = s + 1; k <= d - 1; ++k) {
      Int t = order[static_cast<size_t>(k - 1)];
      w.coords += (ctotal[static_cast<size_t>(t)] - cs) * plain[static_cast<size_t>(t)].coords;
    }
    fd.node_weights.push_back(w);
  }
  fd.node_weights.push_back(type_to_weight(entrywise_dual(tau)));
  return fd;
}

}  // namespace torsor
