#include "torsor/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "torsor/alcove.hpp"
#include "torsor/charts.hpp"
#include "torsor/cyclic_types.hpp"
#include "torsor/fibers.hpp"
#include "torsor/mckay.hpp"
#include "torsor/parabolic.hpp"
#include "torsor/root_datum.hpp"
#include "torsor/stability.hpp"

namespace torsor {

std::vector<std::string> supported_types(int max_rank) {
  std::vector<std::string> out;
  for (int l = 1; l <= max_rank; ++l) out.push_back("A" + std::to_string(l));
  for (int l = 2; l <= max_rank; ++l) out.push_back("B" + std::to_string(l));
  for (int l = 2; l <= max_rank; ++l) out.push_back("C" + std::to_string(l));
  for (int l = 3; l <= max_rank; ++l) out.push_back("D" + std::to_string(l));
  for (int l = 6; l <= std::min(max_rank, 8); ++l) out.push_back("E" + std::to_string(l));
  if (max_rank >= 4) out.push_back("F4");
  if (max_rank >= 2) out.push_back("G2");
  return out;
}

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;
  int noted = 0;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (noted < 8) detail << (noted ? "; " : "") << what;
      ++noted;
    }
  }
};

// Enumerates all admissible types with alcove weight for one root datum:
// d <= rank+1 and sum n_j a_j <= d by construction.
std::vector<CyclicType> alcove_admissible_types(const RootDatum& rd) {
  std::vector<CyclicType> found;
  const int l = rd.rank();
  for (Int d = 1; d <= l + 1; ++d) {
    IntVec a = IntVec::Zero(l);
    std::function<void(int, Int)> dfs = [&](int j, Int used) {
      if (j == l) {
        CyclicType tau = CyclicType::make(d, a);
        if (is_admissible(rd, tau)) found.push_back(tau);
        return;
      }
      Int nj = rd.mark(j + 1);
      for (Int v = 0; v < d && used + nj * v <= d; ++v) {
        a(j) = v;
        dfs(j + 1, used + nj * v);
      }
      a(j) = 0;
    };
    dfs(0, 0);
  }
  return found;
}

std::vector<Int> sorted_residues(const ApartmentPoint& p, Int d) {
  std::vector<Int> r;
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
    Rat scaled = p.coords(i) * Rat(d);
    if (!scaled.is_integer()) return {};  // not a type weight
    Int v = scaled.floor_ll() % d;
    if (v < 0) v += d;
    r.push_back(v);
  }
  std::sort(r.begin(), r.end());
  return r;
}

CheckResult criterion_counterexample() {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  CounterexampleReport rep = counterexample_gl2();
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  c.expect(rep.deg_L_prime == -1, "deg L' != -1");
  c.expect(rep.deg_N == 0, "deg N != 0");
  c.expect(rep.deg_saturation == 1, "deg saturation != 1");
  c.expect(rep.naive_test_fails, "naive bound unexpectedly holds");
  c.expect(rep.witness_slope < Rat(0), "witness slope not destabilizing");
  c.expect(ms < 1000, "runtime exceeded 1s");
  return {"counterexample degrees (L'=-1, N=0, saturation=1, <1s)", c.ok, c.detail.str()};
}

CheckResult criterion_barycenters() {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  for (const std::string& label : supported_types(8)) {
    RootDatum rd = build_root_datum(label);
    const int l = rd.rank();
    for (unsigned mask = 1; mask < (1u << (l + 1)); ++mask) {
      std::vector<int> M;
      for (int j = 0; j <= l; ++j)
        if (mask & (1u << j)) M.push_back(j);
      Facet f = facet(rd, M);
      for (int j = 0; j <= l; ++j) {
        Rat v = basic_affine_root_eval(rd, j, f.barycenter);
        bool in_M = std::find(M.begin(), M.end(), j) != M.end();
        if (in_M)
          c.expect(v == Rat(1, f.h_M), label + " M-wall value off");
        else
          c.expect(v == Rat(0), label + " off-wall value nonzero");
      }
      // Lattice-denominator divisibility: d_M | e·h_M.
      c.expect((rd.center_exponent * f.h_M) % f.d_M == 0, label + " d_M does not divide e*h_M");
      // Brute-force minimal-m oracle in small rank.
      if (l <= 4) {
        Int brute = 0;
        for (Int m = 1; m <= rd.center_exponent * f.h_M; ++m) {
          RatVec scaled = to_coroot_coords(rd, f.barycenter) * Rat(m);
          if (all_integral(scaled)) {
            brute = m;
            break;
          }
        }
        c.expect(brute == f.d_M, label + " brute-force d_M mismatch");
      }
    }
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  c.expect(secs < 30, "facet sweep exceeded 30s");
  return {"facet barycenters solve the wall equations; d_M matches brute force", c.ok, c.detail.str()};
}

CheckResult criterion_admissibility_bound() {
  Checker c;
  auto t0 = std::chrono::steady_clock::now();
  long scanned = 0;
  for (const std::string& label : supported_types(4)) {
    RootDatum rd = build_root_datum(label);
    const int l = rd.rank();
    for (Int d = 1; d <= l + 2; ++d) {
      IntVec a = IntVec::Zero(l);
      std::function<void(int)> dfs = [&](int j) {
        if (j == l) {
          ++scanned;
          if (is_admissible(rd, CyclicType{d, a}))
            c.expect(d <= l + 1, label + " admissible with d = " + std::to_string(d));
          return;
        }
        for (Int v = 0; v < d; ++v) {
          a(j) = v;
          dfs(j + 1);
        }
        a(j) = 0;
      };
      dfs(0);
    }
  }
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
  c.expect(secs < 60, "admissibility scan exceeded 60s");
  std::ostringstream os;
  os << "scanned " << scanned << " types";
  return {"admissibility forces d <= rank+1 (exhaustive, ranks <= 4)", c.ok,
          c.ok ? os.str() : c.detail.str()};
}

CheckResult criterion_fiber_consistency() {
  Checker c;
  std::vector<std::pair<RootDatum, std::vector<CyclicType>>> pools;
  for (const std::string& label : supported_types(6)) {
    RootDatum rd = build_root_datum(label);
    auto types = alcove_admissible_types(rd);
    if (!types.empty()) pools.emplace_back(std::move(rd), std::move(types));
  }
  c.expect(!pools.empty(), "no admissible types found");
  std::mt19937_64 rng(20240917);
  int strict_checked = 0;
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const auto& [rd, types] = pools[rng() % pools.size()];
    const CyclicType& tau = types[rng() % types.size()];
    FiberDescription fd = fiber_description(rd, tau);
    ApartmentPoint theta = type_to_weight(tau);

    // Partition identity: the chain weights sum back to theta.
    ApartmentPoint sum = ApartmentPoint::zero(rd.rank());
    for (const auto& w : fd.chain_weights) sum.coords += w.coords;
    if (tau.d > 1) c.expect(sum == theta, rd.lie_type.str() + " partition identity failed");

    for (const auto& w : fd.chain_weights)
      c.expect(in_alcove(rd, w), rd.lie_type.str() + " chain weight off the alcove");
    for (const auto& w : fd.node_weights)
      c.expect(in_alcove(rd, w), rd.lie_type.str() + " node weight off the alcove");
    c.expect(static_cast<Int>(fd.chain_weights.size()) == tau.d - 1, "chain length");
    c.expect(static_cast<Int>(fd.node_weights.size()) == std::max<Int>(tau.d, 1), "node count");

    // Dual cross-check on sorted residues when the grouped coefficients are
    // strictly ordered.
    if (!fd.tied_groups && tau.d > 1) {
      auto lhs = sorted_residues(fd.node_weights.back(), tau.d);
      CyclicType dual = balanced_dual(tau);
      std::vector<Int> rhs(dual.a.data(), dual.a.data() + dual.a.size());
      std::sort(rhs.begin(), rhs.end());
      c.expect(lhs == rhs, rd.lie_type.str() + " dual-weight residues mismatch");
      ++strict_checked;
    }
  }
  std::ostringstream os;
  os << "1000 samples, " << strict_checked << " strict-order dual checks";
  return {"fiber weights: partition identity, alcove membership, dual residues", c.ok,
          c.ok ? os.str() : c.detail.str()};
}

CheckResult criterion_mckay() {
  Checker c;
  for (Int d = 2; d <= 64; ++d) {
    McKayData md = mckay_data(d);
    for (Int s = 1; s < d; ++s) {
      const MonomialPair& g = md.generators[static_cast<size_t>(s - 1)];
      // The plane action scales u with exponent 1 and v with exponent d-1;
      // both generators of character s must transform with exponent s.
      Int wu = (g.u_exp * 1) % d;
      Int wv = (g.v_exp * (d - 1)) % d;
      c.expect(wu == s % d, "u-generator exponent");
      c.expect(wv == s % d, "v-generator exponent");
      c.expect(md.ideals[static_cast<size_t>(s - 1)].t_exp == d - s, "ideal exponent");
    }
    c.expect(md.pairing_matrix == IntMat::Identity(d - 1, d - 1), "pairing matrix not identity");
  }
  return {"invariant generators and ideals match the plane action, d <= 64", c.ok, c.detail.str()};
}

CheckResult criterion_par_deg() {
  Checker c;
  std::mt19937_64 rng(771255);
  auto random_weights = [&](bool zero_least, int s) {
    // Strictly ascending rationals in [0,1): distinct numerators over a
    // common large denominator.
    Int den = 997;
    std::vector<Int> nums;
    while (static_cast<int>(nums.size()) < s) {
      Int v = static_cast<Int>(rng() % 996) + 1;
      if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
    }
    std::sort(nums.begin(), nums.end());
    std::vector<Rat> alpha;
    for (int i = 0; i < s; ++i) alpha.push_back(Rat(nums[static_cast<size_t>(i)], den));
    if (zero_least) alpha.front() = Rat(0);
    return alpha;
  };
  for (int trial = 0; trial < 10000 && c.ok; ++trial) {
    int s = 1 + static_cast<int>(rng() % 5);
    bool zero_least = rng() % 2;
    std::vector<Int> k;
    for (int i = 0; i < s; ++i) k.push_back(1 + static_cast<Int>(rng() % 4));
    LacedBundleData b;
    b.deg = static_cast<Int>(rng() % 41) - 20;
    b.weights = BalancedWeights::make(random_weights(zero_least, s), k);
    b.lacing_arity = (rng() % 2) ? s : 1;

    Rat pd = par_deg(b);  // internal dual-formula agreement enforced here
    Int n = b.weights.total_rank();
    Rat expected = Rat(b.deg) + (zero_least ? Rat(n - k.front()) : Rat(n));
    c.expect(pd == expected, "closed form value");

    // Weight-value perturbation with the same zero pattern and
    // multiplicities must not move the parabolic degree.
    LacedBundleData b2 = b;
    b2.weights = BalancedWeights::make(random_weights(zero_least, s), k);
    c.expect(par_deg(b2) == pd, "weight perturbation moved par_deg");
  }
  return {"parabolic degree: dual formulas agree, weight-independent (10^4 draws)", c.ok,
          c.detail.str()};
}

CheckResult criterion_slopes() {
  Checker c;
  std::mt19937_64 rng(90125);
  for (int trial = 0; trial < 10000 && c.ok; ++trial) {
    int s = static_cast<int>(rng() % 5);  // proper steps
    std::vector<Int> gammas;
    Int g = -static_cast<Int>(rng() % 10) - 1;
    for (int i = 0; i <= s; ++i) {
      gammas.push_back(g);
      g += 1 + static_cast<Int>(rng() % 5);
    }
    std::vector<Int> ranks;
    for (int i = 0; i <= s; ++i) ranks.push_back(1 + static_cast<Int>(rng() % 4));
    std::vector<Rat> degrees;
    for (int i = 0; i < s; ++i)
      degrees.push_back(Rat(static_cast<Int>(rng() % 21) - 10, 1 + static_cast<Int>(rng() % 6)));
    Rat total(static_cast<Int>(rng() % 21) - 10, 1 + static_cast<Int>(rng() % 6));
    WeightedFiltration f = WeightedFiltration::make(gammas, ranks, degrees, total);

    Rat slope = schmitt_slope(f);
    if (s == 0) c.expect(slope == Rat(0), "empty filtration slope nonzero");

    Int m = 1 + static_cast<Int>(rng() % 10);
    std::vector<Int> scaled = gammas;
    for (Int& x : scaled) x *= m;
    WeightedFiltration fs = WeightedFiltration::make(scaled, ranks, degrees, total);
    c.expect(schmitt_slope(fs) == Rat(m) * slope, "lambda scaling not linear");
    c.expect((schmitt_slope(fs) > Rat(0)) == (slope > Rat(0)) &&
                 (schmitt_slope(fs) < Rat(0)) == (slope < Rat(0)),
             "lambda scaling changed the verdict sign");

    Int shift = static_cast<Int>(rng() % 21) - 10;
    std::vector<Int> shifted = gammas;
    for (Int& x : shifted) x += shift;
    WeightedFiltration ft = WeightedFiltration::make(shifted, ranks, degrees, total);
    c.expect(schmitt_slope(ft) == slope, "gamma translation moved the slope");
  }
  return {"slope invariances: scaling linear, translation invariant (10^4 draws)", c.ok,
          c.detail.str()};
}

CheckResult criterion_charts() {
  Checker c;
  for (Int d = 2; d <= 12; ++d) {
    std::vector<MonomialMap> trans;
    for (Int ell = 1; ell <= d - 1; ++ell) trans.push_back(degeneration_transition(ell, d));
    for (const auto& t : trans) c.expect(t.unimodular(), "transition not unimodular");
    // Cocycle consistency on consecutive pairs.
    for (size_t i = 0; i + 1 < trans.size(); ++i) {
      MonomialMap two = trans[i + 1].after(trans[i]);
      c.expect(two.exponents == trans[i + 1].exponents * trans[i].exponents, "cocycle");
      c.expect(two.unimodular(), "composite not unimodular");
    }
    // Torus equivariance: chart weights intertwine through the transitions.
    std::vector<IntMat> w = gm_action(d);
    for (Int ell = 1; ell <= d - 1; ++ell)
      c.expect(w[static_cast<size_t>(ell)] ==
                   trans[static_cast<size_t>(ell - 1)].exponents * w[static_cast<size_t>(ell - 1)],
               "equivariance at d=" + std::to_string(d));
    // The invariant monomial (the product of all coordinates) has weight 0.
    for (const IntMat& m : w)
      c.expect((m.colwise().sum().array() == 0).all(), "product coordinate not invariant");
  }
  // Resolution-chart compatibility for the two-chart system.
  MonomialMap u = resolution_transition();
  c.expect(u.unimodular(), "resolution transition not unimodular");
  c.expect(u.after(resolution_embedding(1)).exponents ==
               resolution_embedding(2).after(degeneration_transition(1, 2)).exponents,
           "embedding compatibility");
  // Doubled tautological-bundle chart: after swapping the first two
  // coordinates it is exactly the d=2 transition.
  IntMat swap = IntMat::Identity(3, 3);
  swap(0, 0) = 0; swap(1, 1) = 0; swap(0, 1) = 1; swap(1, 0) = 1;
  MonomialMap sw{swap};
  c.expect(sw.after(line_bundle_transition().after(sw)).exponents ==
               degeneration_transition(1, 2).exponents,
           "line-bundle chart does not match the d=2 transition");
  return {"chart identities: cocycle, unimodularity, equivariance (d <= 12)", c.ok,
          c.detail.str()};
}

CheckResult criterion_root_data() {
  Checker c;
  for (const std::string& label : supported_types(8)) {
    RootDatum rd = build_root_datum(label);
    Int sum = rd.highest_root_coeffs.sum();
    c.expect(rd.coxeter_number == sum + 1, label + " coxeter number");
    Int npos = static_cast<Int>(rd.positive_roots.size());
    c.expect(2 * npos == rd.rank() * rd.coxeter_number, label + " |R+| != l*h/2");
    RatMat prod = to_rat(rd.cartan) * rd.inv_cartan;
    c.expect(prod == RatMat::Identity(rd.rank(), rd.rank()), label + " C*C^-1 != I");
    for (const IntVec& r : rd.positive_roots)
      c.expect((rd.highest_root_coeffs - r).minCoeff() >= 0, label + " highest root not dominant");
  }
  return {"root data: h = sum n_j + 1, |R+| = l*h/2, exact Cartan inverse", c.ok, c.detail.str()};
}

}  // namespace

std::vector<CheckResult> run_selftest() {
  std::vector<CheckResult> out;
  out.push_back(criterion_counterexample());
  out.push_back(criterion_barycenters());
  out.push_back(criterion_admissibility_bound());
  out.push_back(criterion_fiber_consistency());
  out.push_back(criterion_mckay());
  out.push_back(criterion_par_deg());
  out.push_back(criterion_slopes());
  out.push_back(criterion_charts());
  out.push_back(criterion_root_data());
  return out;
}

}  // namespace torsor
