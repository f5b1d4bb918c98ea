#include <doctest.h>

#include "torsor/charts.hpp"

using namespace torsor;

TEST_CASE("degeneration transitions") {
  // d = 2: three coordinates map to (u1·u2, 1/u2, u2·u3).
  MonomialMap t = degeneration_transition(1, 2);
  IntMat expect(3, 3);
  expect << 1, 1, 0,
            0, -1, 0,
            0, 1, 1;
  CHECK(t.exponents == expect);

  // Away from the active triple the map is the identity.
  MonomialMap t2 = degeneration_transition(2, 5);
  for (Int j : {0, 4, 5})
    for (Int k = 0; k < 6; ++k)
      CHECK(t2.exponents(j, k) == (j == k ? 1 : 0));

  // Inverse over Laurent monomials: unimodular, and the rational inverse is
  // an integer matrix composing to the identity.
  RatMat inv = to_rat(t.exponents).fullPivLu().inverse();
  IntMat invi(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      REQUIRE(inv(i, j).is_integer());
      invi(i, j) = inv(i, j).floor_ll();
    }
  CHECK(IntMat(invi * t.exponents) == IntMat(IntMat::Identity(3, 3)));

  CHECK_THROWS_AS(degeneration_transition(0, 4), std::invalid_argument);
  CHECK_THROWS_AS(degeneration_transition(4, 4), std::invalid_argument);
}

TEST_CASE("resolution transitions and embeddings") {
  MonomialMap u = resolution_transition();
  IntMat expect(2, 2);
  expect << 2, 1, -1, 0;
  CHECK(u.exponents == expect);
  CHECK(exact_det(u.exponents) == Rat(1));

  // Applying twice: a -> a^3 b^2.
  IntMat twice = u.exponents * u.exponents;
  IntMat sq(2, 2);
  sq << 3, 2, -2, -1;
  CHECK(twice == sq);

  IntMat e1(2, 3), e2(2, 3);
  e1 << 0, 1, 0,
        1, 0, 1;
  e2 << 1, 0, 1,
        0, 1, 0;
  CHECK(resolution_embedding(1).exponents == e1);
  CHECK(resolution_embedding(2).exponents == e2);
  CHECK_THROWS_AS(resolution_embedding(3), std::invalid_argument);

  // Compatibility square: resolution transition after the first embedding
  // equals the second embedding after the degeneration transition.
  CHECK(u.after(resolution_embedding(1)).exponents ==
        resolution_embedding(2).after(degeneration_transition(1, 2)).exponents);
}

TEST_CASE("torus action weight matrices") {
  // d = 1: a single chart with the trivial action.
  auto w1 = gm_action(1);
  REQUIRE(w1.size() == 1);
  CHECK(w1[0] == IntMat(IntMat::Zero(2, 1)));

  for (Int d : {2, 3, 5, 8}) {
    auto w = gm_action(d);
    REQUIRE(static_cast<Int>(w.size()) == d);
    for (const IntMat& m : w) {
      CHECK(m.rows() == d + 1);
      CHECK(m.cols() == d);
      // The product of all chart coordinates is invariant.
      CHECK((m.colwise().sum().array() == 0).all());
      // The convention pins the last torus factor to act trivially.
      CHECK((m.col(d - 1).array() == 0).all());
    }
    // Equivariance through every chart change.
    for (Int ell = 1; ell <= d - 1; ++ell) {
      MonomialMap t = degeneration_transition(ell, d);
      CHECK(w[static_cast<size_t>(ell)] == IntMat(t.exponents * w[static_cast<size_t>(ell - 1)]));
    }
  }
}

TEST_CASE("cocycle consistency and unimodularity") {
  for (Int d = 2; d <= 12; ++d) {
    std::vector<MonomialMap> trans;
    for (Int ell = 1; ell <= d - 1; ++ell) trans.push_back(degeneration_transition(ell, d));
    for (const auto& t : trans) CHECK(t.unimodular());
    for (size_t i = 0; i + 1 < trans.size(); ++i) {
      MonomialMap comp = trans[i + 1].after(trans[i]);
      CHECK(comp.exponents == IntMat(trans[i + 1].exponents * trans[i].exponents));
      CHECK(comp.unimodular());
    }
  }
}

TEST_CASE("line bundle chart matches the three-coordinate transition") {
  MonomialMap lb = line_bundle_transition();
  CHECK(lb.unimodular());
  // Swap the base coordinate into the middle slot: the chart is exactly the
  // d = 2 transition.
  IntMat swap(3, 3);
  swap << 0, 1, 0,
          1, 0, 0,
          0, 0, 1;
  MonomialMap sw{swap};
  CHECK(sw.after(lb.after(sw)).exponents == degeneration_transition(1, 2).exponents);
}

TEST_CASE("chain bundle classification") {
  IntMat zero = IntMat::Zero(3, 4);
  ChainBundleReport r0 = chain_bundle_check(zero);
  CHECK(r0.standard);
  CHECK_FALSE(r0.strictly_standard);
  CHECK(r0.violations.empty());

  IntMat good(2, 3);
  good << 1, 0, 0,
          0, 1, 1;
  ChainBundleReport r1 = chain_bundle_check(good);
  CHECK(r1.standard);
  CHECK(r1.strictly_standard);

  IntMat bad(2, 3);
  bad << 1, 0, 0,
        0, 2, 1;
  ChainBundleReport r2 = chain_bundle_check(bad);
  CHECK_FALSE(r2.standard);
  CHECK_FALSE(r2.strictly_standard);
  REQUIRE(r2.violations.size() == 1);
  CHECK(r2.violations[0] == std::make_pair(1, 1));
  CHECK(r2.torsion_free_note == "not checked");

  IntMat neg(1, 2);
  neg << -1, 1;
  CHECK_FALSE(chain_bundle_check(neg).standard);
}

TEST_CASE("monomial map composition arity checks") {
  CHECK_THROWS_AS(resolution_embedding(1).after(resolution_transition()),
                  std::invalid_argument);
  CHECK(MonomialMap::identity(4).exponents == IntMat(IntMat::Identity(4, 4)));
}
