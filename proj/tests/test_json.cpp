#include <doctest.h>

#include <random>

#include "torsor/json_io.hpp"

using namespace torsor;

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(rat_json(Rat(1, 3)) == "1/3");
  CHECK(rat_json(Rat(-7)) == "-7");
  CHECK(rat_from_json(json("22/7")) == Rat(22, 7));
  CHECK(rat_from_json(json(5)) == Rat(5));
  CHECK_THROWS_AS(rat_from_json(json(1.5)), std::invalid_argument);
}

TEST_CASE("filtration round trip is the identity") {
  std::mt19937_64 rng(607);
  for (int trial = 0; trial < 200; ++trial) {
    int s = static_cast<int>(rng() % 4);
    std::vector<Int> gammas;
    Int g = -5;
    for (int i = 0; i <= s; ++i) {
      gammas.push_back(g);
      g += 1 + static_cast<Int>(rng() % 3);
    }
    std::vector<Int> ranks(static_cast<size_t>(s + 1), 1);
    std::vector<Rat> degrees;
    for (int i = 0; i < s; ++i)
      degrees.push_back(Rat(static_cast<Int>(rng() % 9) - 4, 1 + static_cast<Int>(rng() % 5)));
    WeightedFiltration f = WeightedFiltration::make(gammas, ranks, degrees,
                                                    Rat(static_cast<Int>(rng() % 9) - 4));
    WeightedFiltration back = filtration_from_json(filtration_json(f));
    CHECK(back.gammas == f.gammas);
    CHECK(back.ranks == f.ranks);
    CHECK(back.degrees == f.degrees);
    CHECK(back.total_deg == f.total_deg);
    // And the slope, the quantity the file feeds, is reproduced exactly.
    CHECK(parabolic_schmitt_slope(back) == parabolic_schmitt_slope(f));
  }
}

TEST_CASE("facet and fiber payloads carry exact coordinates") {
  RootDatum a2 = build_root_datum("A2");
  json fj = facet_json(facet(a2, {0, 1}));
  CHECK(fj["h_M"] == 2);
  CHECK(fj["barycenter"][0] == "1/2");
  CHECK(fj["barycenter"][1] == "0");

  CyclicType tau = CyclicType::make(3, [] {
    IntVec a(2);
    a << 1, 2;
    return a;
  }());
  json tj = type_report_json(a2, tau);
  CHECK(tj["theta_tau"][0] == "1/3");
  CHECK(tj["injective"] == true);
  CHECK(tj["admissible"] == true);
  CHECK(tj["dual"]["a"][0] == 1);
  CHECK(tj["dual"]["a"][1] == 2);

  json mj = mckay_json(mckay_data(5));
  CHECK(mj["table"][1]["generators"][0] == "u^2");
  CHECK(mj["table"][1]["generators"][1] == "v^3");
  CHECK(mj["table"][1]["ideal"][1] == "t^3");

  json cj = counterexample_json(counterexample_gl2());
  CHECK(cj["deg_saturation"] == 1);
  CHECK(cj["deg_L_prime"] == -1);
  CHECK(cj["deg_N"] == 0);
}
