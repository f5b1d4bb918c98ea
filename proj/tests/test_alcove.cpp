#include <doctest.h>

#include <algorithm>
#include <random>

#include "torsor/alcove.hpp"
#include "torsor/selftest.hpp"

using namespace torsor;

namespace {

ApartmentPoint pt(std::initializer_list<Rat> xs) {
  RatVec v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const Rat& x : xs) v(i++) = x;
  return ApartmentPoint{v};
}

// Brute-force lattice-denominator oracle: scan m = 1, 2, ... until
// m·theta has integral coroot coordinates.
Int brute_d_M(const RootDatum& rd, const ApartmentPoint& theta, Int bound) {
  RatVec coroot = to_coroot_coords(rd, theta);
  for (Int m = 1; m <= bound; ++m) {
    if (all_integral(RatVec(coroot * Rat(m)))) return m;
  }
  return -1;
}

}  // namespace

TEST_CASE("affine root evaluation") {
  RootDatum a1 = build_root_datum("A1");
  RootDatum a2 = build_root_datum("A2");

  // theta = 0: value is the constant term.
  for (Int n : {-2, 0, 5})
    CHECK(affine_root_eval(ApartmentPoint::zero(2), a2.positive_roots[0], n) == Rat(n));

  // The affine root (-highest, 1) at the A_1 midpoint.
  IntVec neg_highest1 = -a1.highest_root_coeffs;
  CHECK(affine_root_eval(pt({Rat(1, 2)}), neg_highest1, 1) == Rat(1, 2));
  CHECK(basic_affine_root_eval(a1, 0, pt({Rat(1, 2)})) == Rat(1, 2));

  CHECK(basic_affine_root_eval(a2, 0, pt({Rat(1, 3), Rat(1, 3)})) == Rat(1, 3));
}

TEST_CASE("alcove membership") {
  RootDatum a1 = build_root_datum("A1");
  RootDatum a2 = build_root_datum("A2");

  CHECK(in_alcove(a1, ApartmentPoint::zero(1)));
  CHECK(in_alcove(a1, pt({Rat(1, 2)})));
  // Oracle (basic affine roots): theta_0(3/4) = 1/4 >= 0, so inside; the
  // fundamental-coweight alcove of A_1 is [0, 1].
  CHECK(in_alcove(a1, pt({Rat(3, 4)})));
  CHECK(in_alcove(a1, pt({Rat(1)})));
  CHECK_FALSE(in_alcove(a1, pt({Rat(3, 2)})));
  CHECK_FALSE(in_alcove(a1, pt({Rat(-1, 4)})));

  CHECK(in_alcove(a2, pt({Rat(1, 3), Rat(2, 3)})));  // boundary, theta_0 = 0
  CHECK_FALSE(in_alcove(a2, pt({Rat(2, 3), Rat(2, 3)})));
}

TEST_CASE("alcove vertices") {
  RootDatum a1 = build_root_datum("A1");
  auto v1 = alcove_vertices(a1);
  REQUIRE(v1.size() == 2);
  CHECK(v1[0] == ApartmentPoint::zero(1));
  CHECK(v1[1] == pt({Rat(1)}));

  auto v2 = alcove_vertices(build_root_datum("A2"));
  REQUIRE(v2.size() == 3);
  CHECK(v2[1] == pt({Rat(1), Rat(0)}));
  CHECK(v2[2] == pt({Rat(0), Rat(1)}));

  auto vg = alcove_vertices(build_root_datum("G2"));
  REQUIRE(vg.size() == 3);
  CHECK(vg[1] == pt({Rat(1, 3), Rat(0)}));
  CHECK(vg[2] == pt({Rat(0), Rat(1, 2)}));

  // Each vertex kills all basic affine roots except one.
  for (const char* label : {"A3", "B3", "G2"}) {
    RootDatum rd = build_root_datum(label);
    auto vs = alcove_vertices(rd);
    for (int j = 0; j <= rd.rank(); ++j)
      for (int i = 0; i <= rd.rank(); ++i) {
        Rat v = basic_affine_root_eval(rd, i, vs[static_cast<size_t>(j)]);
        if (i == j)
          CHECK(v > Rat(0));
        else
          CHECK(v == Rat(0));
      }
  }
}

TEST_CASE("facet barycenters and lattice denominators") {
  RootDatum a1 = build_root_datum("A1");
  Facet f01 = facet(a1, {0, 1});
  CHECK(f01.h_M == 2);
  CHECK(f01.h_M == a1.coxeter_number);
  CHECK(f01.barycenter == pt({Rat(1, 2)}));
  CHECK(to_coroot_coords(a1, f01.barycenter) == RatVec(RatVec::Constant(1, Rat(1, 4))));
  CHECK(f01.d_M == 4);
  CHECK(brute_d_M(a1, f01.barycenter, 8) == 4);

  RootDatum a2 = build_root_datum("A2");
  Facet f1 = facet(a2, {1});
  CHECK(f1.barycenter == pt({Rat(1), Rat(0)}));  // the vertex itself
  CHECK(f1.d_M == 3);

  for (const char* label : {"A2", "B3", "G2"}) {
    Facet f0 = facet(build_root_datum(label), {0});
    CHECK(f0.barycenter.coords == RatVec(RatVec::Zero(f0.barycenter.rank())));
    CHECK(f0.d_M == 1);
  }

  CHECK_THROWS_AS(facet(a2, {}), std::invalid_argument);
  CHECK_THROWS_AS(facet(a2, {0, 5}), std::invalid_argument);
}

TEST_CASE("barycenter wall equations and vertex expansion") {
  for (const char* label : {"A3", "B3", "C2", "G2", "F4"}) {
    RootDatum rd = build_root_datum(label);
    const int l = rd.rank();
    auto vertices = alcove_vertices(rd);
    for (unsigned mask = 1; mask < (1u << (l + 1)); ++mask) {
      std::vector<int> M;
      for (int j = 0; j <= l; ++j)
        if (mask & (1u << j)) M.push_back(j);
      Facet f = facet(rd, M);
      CAPTURE(label);
      CAPTURE(mask);
      for (int j = 0; j <= l; ++j) {
        Rat v = basic_affine_root_eval(rd, j, f.barycenter);
        bool in_M = (mask >> j) & 1;
        CHECK(v == (in_M ? Rat(1, f.h_M) : Rat(0)));
      }
      // Expansion over the vertices reproduces the barycenter exactly.
      RatVec expand = RatVec::Zero(l);
      for (int j : M)
        expand += Rat(rd.mark(j), f.h_M) * vertices[static_cast<size_t>(j)].coords;
      CHECK(ApartmentPoint{expand} == f.barycenter);
      // d_M divides e·h_M.
      CHECK((rd.center_exponent * f.h_M) % f.d_M == 0);
      CHECK(brute_d_M(rd, f.barycenter, rd.center_exponent * f.h_M) == f.d_M);
    }
  }
}

TEST_CASE("parahoric depth indices") {
  RootDatum a1 = build_root_datum("A1");
  RootDatum a2 = build_root_datum("A2");

  // Theta = {0}: every depth vanishes.
  for (const auto& [r, m] : parahoric_indices(a2, {ApartmentPoint::zero(2)})) CHECK(m == 0);

  auto find = [](const std::vector<std::pair<IntVec, Int>>& idx, const IntVec& r) {
    for (const auto& [root, m] : idx)
      if (root == r) return m;
    FAIL("root not listed");
    return Int(0);
  };

  auto idx1 = parahoric_indices(a1, {pt({Rat(1, 2)})});
  IntVec alpha = IntVec::Constant(1, 1);
  CHECK(find(idx1, alpha) == 0);
  CHECK(find(idx1, IntVec(-alpha)) == 1);

  auto idx2 = parahoric_indices(a2, {pt({Rat(1, 3), Rat(2, 3)})});
  IntVec a1v(2), a12(2);
  a1v << 1, 0;
  a12 << 1, 1;
  CHECK(find(idx2, a1v) == 0);
  CHECK(find(idx2, IntVec(-a1v)) == 1);
  CHECK(find(idx2, a12) == -1);
  CHECK(find(idx2, IntVec(-a12)) == 1);

  CHECK_THROWS_AS(parahoric_indices(a2, {}), std::invalid_argument);
}

TEST_CASE("depth indices of opposite roots differ by integrality") {
  std::mt19937_64 rng(5150);
  RootDatum rd = build_root_datum("B3");
  for (int trial = 0; trial < 200; ++trial) {
    RatVec c(3);
    for (int i = 0; i < 3; ++i)
      c(i) = Rat(static_cast<Int>(rng() % 19) - 9, 1 + static_cast<Int>(rng() % 6));
    ApartmentPoint theta{c};
    auto idx = parahoric_indices(rd, {theta});
    for (const auto& [r, m] : idx) {
      Rat p = pairing(theta, r);
      // m_r + m_{-r} is 0 exactly on integral pairings, else 1.
      Int opp = -((-p).floor_ll());
      Int sum = -p.floor_ll() + opp;
      (void)sum;
      Int m_opp = 0;
      for (const auto& [r2, m2] : idx)
        if (r2 == IntVec(-r)) m_opp = m2;
      CHECK(m + m_opp == (p.is_integer() ? 0 : 1));
    }
  }
}

TEST_CASE("membership matches the positive-root characterization") {
  // Independent oracle: theta lies in the closed fundamental alcove iff
  // 0 <= (theta, r) <= 1 for every positive root r.
  std::mt19937_64 rng(60902);
  for (const char* label : {"A2", "B3", "G2", "D4"}) {
    RootDatum rd = build_root_datum(label);
    for (int trial = 0; trial < 400; ++trial) {
      RatVec c(rd.rank());
      for (int i = 0; i < rd.rank(); ++i)
        c(i) = Rat(static_cast<Int>(rng() % 13) - 3, 1 + static_cast<Int>(rng() % 8));
      ApartmentPoint theta{c};
      bool oracle = true;
      for (const IntVec& r : rd.positive_roots) {
        Rat p = pairing(theta, r);
        if (p < Rat(0) || p > Rat(1)) oracle = false;
      }
      CHECK(in_alcove(rd, theta) == oracle);
    }
  }
}

TEST_CASE("depth indices over multi-point sets take the infimum") {
  RootDatum a1 = build_root_datum("A1");
  IntVec alpha = IntVec::Constant(1, 1);
  // Two points: pairings 1/2 and -5/3; the infimum -5/3 floors to -2.
  std::vector<ApartmentPoint> Theta{pt({Rat(1, 2)}), pt({Rat(-5, 3)})};
  auto idx = parahoric_indices(a1, Theta);
  for (const auto& [r, m] : idx) {
    if (r == alpha) CHECK(m == 2);            // -floor(-5/3) = 2
    if (r == IntVec(-alpha)) CHECK(m == 1);   // -floor(-1/2) = 1
  }

  // Against a brute minimum over the set, any type.
  std::mt19937_64 rng(7171);
  RootDatum g2 = build_root_datum("G2");
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ApartmentPoint> pts;
    for (int k = 0; k < 3; ++k) {
      RatVec c(2);
      for (int i = 0; i < 2; ++i)
        c(i) = Rat(static_cast<Int>(rng() % 17) - 8, 1 + static_cast<Int>(rng() % 5));
      pts.push_back(ApartmentPoint{c});
    }
    for (const auto& [r, m] : parahoric_indices(g2, pts)) {
      Rat inf = pairing(pts[0], r);
      for (const auto& p : pts) inf = std::min(inf, pairing(p, r));
      CHECK(m == -inf.floor_ll());
    }
  }
}

TEST_CASE("basic affine roots never vanish simultaneously on the alcove") {
  // Their weighted sum is identically 1.
  std::mt19937_64 rng(4242);
  RootDatum rd = build_root_datum("C3");
  for (int trial = 0; trial < 100; ++trial) {
    RatVec c(3);
    for (int i = 0; i < 3; ++i) c(i) = Rat(static_cast<Int>(rng() % 7), 12);
    ApartmentPoint theta{c};
    Rat total(0);
    for (int j = 0; j <= rd.rank(); ++j)
      total += Rat(rd.mark(j)) * basic_affine_root_eval(rd, j, theta);
    CHECK(total == Rat(1));
  }
}
