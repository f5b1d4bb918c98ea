#ifndef TORSOR_LINALG_HPP
#define TORSOR_LINALG_HPP

#include <Eigen/Dense>

#include "torsor/rational.hpp"

namespace Eigen {

template <>
struct NumTraits<torsor::Rat> : GenericNumTraits<torsor::Rat> {
  typedef torsor::Rat Real;
  typedef torsor::Rat NonInteger;
  typedef torsor::Rat Nested;
  typedef torsor::Rat Literal;
  static inline Real epsilon() { return torsor::Rat(0); }
  static inline Real dummy_precision() { return torsor::Rat(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};

}  // namespace Eigen

namespace torsor {

using Int = long long;

using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rat(v(i));
  return r;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline bool all_integral(const RatVec& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_integer()) return false;
  return true;
}

/// lcm of the (canonical, positive) denominators of the entries.
inline mpz_class lcm_denominators(const RatVec& v) {
  mpz_class l = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    mpz_class d = v(i).den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

/// Exact determinant of an integer matrix (via rational LU).
inline Rat exact_det(const IntMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: not square");
  if (m.rows() == 0) return Rat(1);
  return RatMat(to_rat(m)).fullPivLu().determinant();
}

}  // namespace torsor

#endif  // TORSOR_LINALG_HPP
