#include "torsor/alcove.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace torsor {

Rat affine_root_eval(const ApartmentPoint& theta, const IntVec& root, Int n) {
  return pairing(theta, root) + Rat(n);
}

Rat basic_affine_root_eval(const RootDatum& rd, int j, const ApartmentPoint& theta) {
  if (j < 0 || j > rd.rank())
    throw std::invalid_argument("basic_affine_root_eval: index out of range");
  if (theta.rank() != rd.rank())
    throw std::invalid_argument("basic_affine_root_eval: rank mismatch");
  if (j > 0) return theta.coords(j - 1);
  Rat acc(1);
  for (int i = 0; i < rd.rank(); ++i)
    acc -= Rat(rd.highest_root_coeffs(i)) * theta.coords(i);
  return acc;
}

bool in_alcove(const RootDatum& rd, const ApartmentPoint& theta) {
  for (int j = 0; j <= rd.rank(); ++j)
    if (basic_affine_root_eval(rd, j, theta) < Rat(0)) return false;
  return true;
}

std::vector<ApartmentPoint> alcove_vertices(const RootDatum& rd) {
  std::vector<ApartmentPoint> vs;
  vs.push_back(ApartmentPoint::zero(rd.rank()));
  for (int j = 1; j <= rd.rank(); ++j) {
    RatVec c = RatVec::Zero(rd.rank());
    c(j - 1) = Rat(1, rd.highest_root_coeffs(j - 1));
    vs.push_back(ApartmentPoint{c});
  }
  return vs;
}

Facet facet(const RootDatum& rd, const std::vector<int>& M) {
  if (M.empty()) throw std::invalid_argument("facet: M must be nonempty");
  std::set<int> ms(M.begin(), M.end());
  for (int j : ms)
    if (j < 0 || j > rd.rank())
      throw std::invalid_argument("facet: index " + std::to_string(j) + " out of range");

  Facet f;
  f.M.assign(ms.begin(), ms.end());
  for (int j : f.M) f.h_M += rd.mark(j);

  // theta_M = sum over M of (n_i / h_M) · vertex_i, i.e. coordinate 1/h_M on
  // the simple indices of M and 0 elsewhere. The defining wall equations are
  // re-checked by the selftest, not here.
  RatVec c = RatVec::Zero(rd.rank());
  for (int j : f.M)
    if (j >= 1) c(j - 1) = Rat(1, f.h_M);
  f.barycenter = ApartmentPoint{c};

  RatVec coroot = to_coroot_coords(rd, f.barycenter);
  mpz_class dm = lcm_denominators(coroot);
  f.d_M = dm.get_si();
  return f;
}

std::vector<std::pair<IntVec, Int>> parahoric_indices(const RootDatum& rd,
                                                      const std::vector<ApartmentPoint>& Theta) {
  if (Theta.empty())
    throw std::invalid_argument("parahoric_indices: Theta must be nonempty");
  std::vector<std::pair<IntVec, Int>> out;
  out.reserve(2 * rd.positive_roots.size());
  auto push = [&](const IntVec& r) {
    Rat inf = pairing(Theta.front(), r);
    for (size_t i = 1; i < Theta.size(); ++i) {
      Rat v = pairing(Theta[i], r);
      if (v < inf) inf = v;
    }
    out.emplace_back(r, -inf.floor_ll());
  };
  for (const IntVec& r : rd.positive_roots) push(r);
  for (const IntVec& r : rd.positive_roots) push(IntVec(-r));
  return out;
}

}  // namespace torsor
