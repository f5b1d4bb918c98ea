#include "torsor/charts.hpp"

#include <stdexcept>

namespace torsor {

MonomialMap degeneration_transition(Int ell, Int d) {
  if (d < 1) throw std::invalid_argument("degeneration_transition: d must be positive");
  if (ell < 1 || ell > d - 1)
    throw std::invalid_argument("degeneration_transition: chart index out of range");
  const Int n = d + 1;
  IntMat e = IntMat::Identity(n, n);
  // 1-indexed coordinate positions ell, ell+1, ell+2.
  e.row(ell - 1).setZero();
  e(ell - 1, ell - 1) = 1;
  e(ell - 1, ell) = 1;
  e.row(ell).setZero();
  e(ell, ell) = -1;
  e.row(ell + 1).setZero();
  e(ell + 1, ell) = 1;
  e(ell + 1, ell + 1) = 1;
  return MonomialMap{e};
}

MonomialMap resolution_transition() {
  IntMat e(2, 2);
  e << 2, 1, -1, 0;
  return MonomialMap{e};
}

MonomialMap resolution_embedding(Int ell) {
  IntMat e = IntMat::Zero(2, 3);
  if (ell == 1) {
    e(0, 1) = 1;              // a = u2
    e(1, 0) = 1; e(1, 2) = 1; // b = u1·u3
  } else if (ell == 2) {
    e(0, 0) = 1; e(0, 2) = 1; // a = u1·u3
    e(1, 1) = 1;              // b = u2
  } else {
    throw std::invalid_argument("resolution_embedding: chart index must be 1 or 2");
  }
  return MonomialMap{e};
}

std::vector<IntMat> gm_action(Int d) {
  if (d < 1) throw std::invalid_argument("gm_action: d must be positive");
  std::vector<IntMat> charts;
  // eps_i = torus basis column i for 1 <= i <= d-1; eps_0 = eps_d = 0.
  auto add_eps = [&](IntMat& m, Int row, Int i, Int sign) {
    if (i >= 1 && i <= d - 1) m(row, i - 1) += sign;
  };
  for (Int ell = 1; ell <= d; ++ell) {
    IntMat w = IntMat::Zero(d + 1, d);
    for (Int j = 1; j <= d + 1; ++j) {
      const Int row = j - 1;
      if (j <= ell - 1) {
        add_eps(w, row, j, +1);
        add_eps(w, row, j - 1, -1);
      } else if (j == ell) {
        add_eps(w, row, ell - 1, -1);
      } else if (j == ell + 1) {
        add_eps(w, row, ell, +1);
      } else {
        add_eps(w, row, j - 1, +1);
        add_eps(w, row, j - 2, -1);
      }
    }
    charts.push_back(std::move(w));
  }
  return charts;
}

MonomialMap line_bundle_transition() {
  IntMat e(3, 3);
  e << -1, 0, 0,
        1, 1, 0,
        1, 0, 1;
  return MonomialMap{e};
}

ChainBundleReport chain_bundle_check(const IntMat& bidegrees) {
  ChainBundleReport rep;
  rep.standard = true;
  for (int i = 0; i < bidegrees.rows(); ++i)
    for (int j = 0; j < bidegrees.cols(); ++j)
      if (bidegrees(i, j) < 0 || bidegrees(i, j) > 1) {
        rep.standard = false;
        rep.violations.emplace_back(i, j);
      }
  rep.strictly_standard = rep.standard && bidegrees.rows() > 0;
  for (int i = 0; i < bidegrees.rows() && rep.strictly_standard; ++i) {
    bool has_one = false;
    for (int j = 0; j < bidegrees.cols(); ++j)
      if (bidegrees(i, j) == 1) has_one = true;
    if (!has_one) rep.strictly_standard = false;
  }
  return rep;
}

}  // namespace torsor
