#include "torsor/mckay.hpp"

#include <stdexcept>

namespace torsor {

namespace {
void check_range(Int s, Int d) {
  if (d < 2) throw std::invalid_argument("mckay: d must be at least 2");
  if (s < 1 || s > d - 1)
    throw std::invalid_argument("mckay: character index s must lie in 1..d-1");
}
}  // namespace

MonomialPair invariant_generators(Int s, Int d) {
  check_range(s, d);
  return MonomialPair{s, d - s};
}

IdealPresentation ideal_presentation(Int s, Int d) {
  check_range(s, d);
  return IdealPresentation{d - s};
}

IntMat mckay_matrix(Int d) {
  if (d < 2) throw std::invalid_argument("mckay_matrix: d must be at least 2");
  return IntMat::Identity(d - 1, d - 1);
}

IntMat chain_intersection_matrix(Int d) {
  if (d < 2) throw std::invalid_argument("chain_intersection_matrix: d must be at least 2");
  IntMat m = IntMat::Zero(d - 1, d - 1);
  for (Int i = 0; i < d - 1; ++i) {
    m(i, i) = -2;
    if (i + 1 < d - 1) {
      m(i, i + 1) = 1;
      m(i + 1, i) = 1;
    }
  }
  return m;
}

McKayData mckay_data(Int d) {
  if (d < 2) throw std::invalid_argument("mckay_data: d must be at least 2");
  McKayData md;
  md.d = d;
  for (Int s = 1; s < d; ++s) {
    md.generators.push_back(invariant_generators(s, d));
    md.ideals.push_back(ideal_presentation(s, d));
  }
  md.pairing_matrix = mckay_matrix(d);
  md.chain_intersection = chain_intersection_matrix(d);
  return md;
}

}  // namespace torsor
