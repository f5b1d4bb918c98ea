#include "torsor/json_io.hpp"

#include "torsor/alcove.hpp"
#include "torsor/cyclic_types.hpp"

namespace torsor {

json rat_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return Rat::parse(j.get<std::string>());
  throw std::invalid_argument("expected a rational as integer or \"p/q\" string");
}

json vec_json(const RatVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rat_json(v(i)));
  return a;
}

json vec_json(const IntVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json point_json(const ApartmentPoint& p) { return vec_json(p.coords); }

json mat_json(const IntMat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json facet_json(const Facet& f) {
  json j;
  j["M"] = f.M;
  j["h_M"] = f.h_M;
  j["barycenter"] = point_json(f.barycenter);
  j["d_M"] = f.d_M;
  return j;
}

json type_report_json(const RootDatum& rd, const CyclicType& tau) {
  json j;
  j["lie"] = rd.lie_type.str();
  j["d"] = tau.d;
  j["a"] = vec_json(tau.a);
  j["theta_tau"] = point_json(type_to_weight(tau));
  CyclicType dual = balanced_dual(tau);
  j["dual"] = {{"d", dual.d}, {"a", vec_json(dual.a)}};
  j["injective"] = is_injective(rd, tau);
  j["admissible"] = is_admissible(rd, tau);
  return j;
}

json mckay_json(const McKayData& md) {
  json j;
  j["d"] = md.d;
  json table = json::array();
  for (Int s = 1; s < md.d; ++s) {
    const MonomialPair& g = md.generators[static_cast<size_t>(s - 1)];
    const IdealPresentation& ip = md.ideals[static_cast<size_t>(s - 1)];
    auto pow = [](const std::string& base, Int e) {
      return e == 1 ? base : base + "^" + std::to_string(e);
    };
    json row;
    row["s"] = s;
    row["generators"] = {pow("u", g.u_exp), pow("v", g.v_exp)};
    row["ideal"] = {"x", pow("t", ip.t_exp)};
    row["component"] = s;
    table.push_back(row);
  }
  j["table"] = table;
  j["chain_intersection"] = mat_json(md.chain_intersection);
  return j;
}

json fiber_json(const RootDatum& rd, const FiberDescription& fd) {
  json j;
  j["lie"] = rd.lie_type.str();
  j["d"] = fd.tau.d;
  j["a"] = vec_json(fd.tau.a);
  j["left_branch"] = fd.left_branch;
  json chain = json::array();
  for (const auto& w : fd.chain_weights) chain.push_back(point_json(w));
  j["chain_weights"] = chain;
  json nodes = json::array();
  for (const auto& w : fd.node_weights) nodes.push_back(point_json(w));
  j["node_weights"] = nodes;
  j["right_branch"] = fd.right_branch;
  j["tied_groups"] = fd.tied_groups;
  return j;
}

json verdict_json(const Verdict& v, Mode mode) {
  json j;
  j["mode"] = (mode == Mode::semistable) ? "semi" : "stable";
  j["pass"] = v.pass;
  j["vacuous"] = v.vacuous;
  if (v.witness_index) j["witness_index"] = *v.witness_index;
  if (v.witness_slope) j["witness_slope"] = rat_json(*v.witness_slope);
  return j;
}

json counterexample_json(const CounterexampleReport& rep) {
  json j;
  j["deg_L"] = rep.deg_L;
  j["deg_L_prime"] = rep.deg_L_prime;
  j["deg_M_prime"] = rep.deg_M_prime;
  j["deg_L_saturated"] = rep.deg_L_saturated;
  j["deg_M_saturated"] = rep.deg_M_saturated;
  j["deg_tensor"] = rep.deg_tensor;
  j["deg_N"] = rep.deg_N;
  j["deg_saturation"] = rep.deg_saturation;
  j["witness_slope"] = rat_json(rep.witness_slope);
  j["naive_test_fails"] = rep.naive_test_fails;
  return j;
}

json filtration_json(const WeightedFiltration& f) {
  json j;
  j["gammas"] = f.gammas;
  j["ranks"] = f.ranks;
  json degs = json::array();
  for (const Rat& d : f.degrees) degs.push_back(rat_json(d));
  j["degrees"] = degs;
  j["total_deg"] = rat_json(f.total_deg);
  return j;
}

WeightedFiltration filtration_from_json(const json& j) {
  std::vector<Int> gammas, ranks;
  for (const auto& g : j.at("gammas")) gammas.push_back(g.get<Int>());
  for (const auto& r : j.at("ranks")) ranks.push_back(r.get<Int>());
  std::vector<Rat> degrees;
  for (const auto& d : j.at("degrees")) degrees.push_back(rat_from_json(d));
  Rat total = rat_from_json(j.at("total_deg"));
  return WeightedFiltration::make(std::move(gammas), std::move(ranks), std::move(degrees),
                                  std::move(total));
}

}  // namespace torsor
