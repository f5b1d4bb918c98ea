// Command-line front end: exact alcove/parahoric combinatorics, cyclic local
// types, the A-type McKay dictionary, degenerate-fiber weights, parabolic
// degrees, slope verdicts, and the degeneration chart atlas.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <fstream>
#include <sstream>

#include "torsor/alcove.hpp"
#include "torsor/charts.hpp"
#include "torsor/cyclic_types.hpp"
#include "torsor/fibers.hpp"
#include "torsor/json_io.hpp"
#include "torsor/mckay.hpp"
#include "torsor/parabolic.hpp"
#include "torsor/root_datum.hpp"
#include "torsor/selftest.hpp"
#include "torsor/stability.hpp"

namespace {

using namespace torsor;

constexpr int kExitOk = 0;
constexpr int kExitVerdictFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
    try {
      size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed integer '" + item + "' in list '" + s + "'");
    }
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list");
  return out;
}

IntVec parse_intvec(const std::string& s) {
  std::vector<int> v = parse_int_list(s);
  IntVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

std::string render_point(const ApartmentPoint& p) {
  std::string s = "(";
  for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
    if (i) s += ", ";
    s += p.coords(i).str();
  }
  return s + ")";
}

struct Options {
  bool json = false;
};

void emit(const Options& opt, const json& j, const std::string& human) {
  if (opt.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << human;
}

int run(int argc, char** argv) {
  CLI::App app{"exact calculus for torsor degenerations on nodal curves"};
  app.require_subcommand(1);
  app.fallthrough();  // accept --json after the subcommand too
  Options opt;
  app.add_flag("--json", opt.json, "machine-readable JSON output");

  // alcove facet
  auto* alcove_cmd = app.add_subcommand("alcove", "alcove and facet combinatorics");
  alcove_cmd->require_subcommand(1);
  auto* facet_cmd = alcove_cmd->add_subcommand("facet", "facet barycenter and lattice denominator");
  std::string facet_type;
  std::string facet_M;
  facet_cmd->add_option("--type", facet_type, "lie type, e.g. A2")->required();
  facet_cmd->add_option("--M", facet_M, "facet index subset, e.g. 0,1")->required();
  facet_cmd->callback([&] {
    RootDatum rd = build_root_datum(facet_type);
    Facet f = facet(rd, parse_int_list(facet_M));
    std::ostringstream os;
    os << "facet M={" << facet_M << "} of " << facet_type << "\n"
       << "  h_M        " << f.h_M << "\n"
       << "  barycenter " << render_point(f.barycenter) << "\n"
       << "  d_M        " << f.d_M << "\n";
    emit(opt, facet_json(f), os.str());
  });
  auto* vertices_cmd = alcove_cmd->add_subcommand("vertices", "alcove vertex coordinates");
  std::string vert_type;
  vertices_cmd->add_option("--type", vert_type, "lie type")->required();
  vertices_cmd->callback([&] {
    RootDatum rd = build_root_datum(vert_type);
    auto vs = alcove_vertices(rd);
    json arr = json::array();
    std::ostringstream os;
    for (size_t j = 0; j < vs.size(); ++j) {
      arr.push_back(point_json(vs[j]));
      os << "  vertex " << j << "  " << render_point(vs[j]) << "\n";
    }
    emit(opt, json{{"vertices", arr}}, os.str());
  });

  // type
  auto* type_cmd = app.add_subcommand("type", "cyclic local-type calculus");
  std::string type_lie, type_a, type_check;
  Int type_d = 1;
  type_cmd->add_option("--lie", type_lie, "lie type")->required();
  type_cmd->add_option("--d", type_d, "cyclic order d")->required();
  type_cmd->add_option("--a", type_a, "type tuple a_1,...,a_l")->required();
  type_cmd->add_option("--check", type_check, "property to gate the exit code on (injective|admissible)");
  type_cmd->callback([&] {
    RootDatum rd = build_root_datum(type_lie);
    CyclicType tau = CyclicType::make(type_d, parse_intvec(type_a));
    if (tau.rank() != rd.rank()) throw std::invalid_argument("type tuple has wrong length");
    json j = type_report_json(rd, tau);
    std::ostringstream os;
    os << "type (d=" << tau.d << ", a=" << type_a << ") in " << type_lie << "\n"
       << "  theta_tau  " << render_point(type_to_weight(tau)) << "\n"
       << "  dual       " << j["dual"]["a"].dump() << "\n"
       << "  injective  " << (j["injective"].get<bool>() ? "yes" : "no") << "\n"
       << "  admissible " << (j["admissible"].get<bool>() ? "yes" : "no") << "\n";
    emit(opt, j, os.str());
    if (type_check == "injective" && !j["injective"].get<bool>()) std::exit(kExitVerdictFail);
    if (type_check == "admissible" && !j["admissible"].get<bool>()) std::exit(kExitVerdictFail);
  });

  // mckay
  auto* mckay_cmd = app.add_subcommand("mckay", "character/component dictionary for the A-type singularity");
  Int mckay_d = 2;
  mckay_cmd->add_option("--d", mckay_d, "cyclic order d >= 2")->required();
  mckay_cmd->callback([&] {
    McKayData md = mckay_data(mckay_d);
    json j = mckay_json(md);
    std::ostringstream os;
    os << "s   generators        ideal        component\n";
    for (const auto& row : j["table"]) {
      std::string gens = "(" + row["generators"][0].get<std::string>() + ", " +
                         row["generators"][1].get<std::string>() + ")";
      std::string ideal = "(" + row["ideal"][0].get<std::string>() + ", " +
                          row["ideal"][1].get<std::string>() + ")";
      os << std::left << std::setw(4) << row["s"].get<Int>() << std::setw(18) << gens
         << std::setw(13) << ideal << "R_" << row["component"].get<Int>() << "\n";
    }
    emit(opt, j, os.str());
  });

  // fibers
  auto* fibers_cmd = app.add_subcommand("fibers", "fiber weights over the degenerate curve");
  std::string fib_lie, fib_a;
  Int fib_d = 1;
  fibers_cmd->add_option("--lie", fib_lie, "lie type")->required();
  fibers_cmd->add_option("--d", fib_d, "cyclic order")->required();
  fibers_cmd->add_option("--a", fib_a, "type tuple")->required();
  fibers_cmd->callback([&] {
    RootDatum rd = build_root_datum(fib_lie);
    CyclicType tau = CyclicType::make(fib_d, parse_intvec(fib_a));
    if (tau.rank() != rd.rank()) throw std::invalid_argument("type tuple has wrong length");
    FiberDescription fd = fiber_description(rd, tau);
    std::ostringstream os;
    os << "fiber weights for (d=" << tau.d << ", a=" << fib_a << ") in " << fib_lie << "\n";
    os << "  branches   G | chain | G\n";
    for (size_t t = 0; t < fd.chain_weights.size(); ++t)
      os << "  component R_" << (t + 1) << "  " << render_point(fd.chain_weights[t]) << "\n";
    for (size_t s = 0; s < fd.node_weights.size(); ++s) {
      const char* tag = (s == 0) ? "y_1 " : (s + 1 == fd.node_weights.size() ? "y_2 " : "node");
      os << "  " << tag << " weight   " << render_point(fd.node_weights[s]) << "\n";
    }
    if (fd.tied_groups) os << "  (tied group coefficients; ties broken by residue)\n";
    emit(opt, fiber_json(rd, fd), os.str());
  });

  // pardeg
  auto* pardeg_cmd = app.add_subcommand("pardeg", "parabolic degree of balanced weight data");
  Int pd_deg = 0;
  std::string pd_weights;
  pardeg_cmd->add_option("--deg", pd_deg, "degree of the underlying bundle")->required();
  pardeg_cmd->add_option("--weights", pd_weights, "weight:multiplicity pairs, e.g. 0:1,1/2:3")->required();
  pardeg_cmd->callback([&] {
    std::vector<Rat> alpha;
    std::vector<Int> mult;
    std::stringstream ss(pd_weights);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("weights: expected w:k pairs, got '" + item + "'");
      alpha.push_back(Rat::parse(item.substr(0, colon)));
      mult.push_back(std::stoll(item.substr(colon + 1)));
    }
    LacedBundleData b;
    b.deg = pd_deg;
    b.weights = BalancedWeights::make(std::move(alpha), std::move(mult));
    b.lacing_arity = b.weights.steps();
    Rat pd = par_deg(b);
    emit(opt, json{{"par_deg", rat_json(pd)}}, "par.deg = " + pd.str() + "\n");
  });

  // verdict
  auto* verdict_cmd = app.add_subcommand("verdict", "slope test over a family of weighted filtrations");
  std::string verdict_mode = "semi";
  std::string verdict_file;
  bool verdict_strict = false;
  verdict_cmd->add_option("--mode", verdict_mode, "semi|stable")->check(CLI::IsMember({"semi", "stable"}));
  verdict_cmd->add_option("--filtrations", verdict_file, "JSON file with a filtrations array")->required();
  verdict_cmd->add_flag("--strict", verdict_strict, "exit 1 when the verdict fails");
  verdict_cmd->callback([&] {
    std::ifstream in(verdict_file);
    if (!in) throw std::invalid_argument("cannot open '" + verdict_file + "'");
    std::vector<WeightedFiltration> fs;
    try {
      json doc = json::parse(in);
      for (const auto& f : doc.at("filtrations")) fs.push_back(filtration_from_json(f));
    } catch (const json::exception& e) {
      throw std::invalid_argument("malformed filtration file: " + std::string(e.what()));
    }
    Mode mode = (verdict_mode == "stable") ? Mode::stable : Mode::semistable;
    Verdict v = tf_semistability_verdict(fs, mode);
    std::ostringstream os;
    os << "verdict: " << (v.pass ? "pass" : "fail");
    if (v.vacuous) os << " (vacuous: no filtrations supplied)";
    if (v.witness_index) os << ", witness #" << *v.witness_index
                            << " slope " << v.witness_slope->str();
    os << "\n";
    emit(opt, verdict_json(v, mode), os.str());
    if (verdict_strict && !v.pass) std::exit(kExitVerdictFail);
  });

  // counterexample
  auto* ce_cmd = app.add_subcommand("counterexample", "degree chain of the rank-2 nodal counterexample");
  ce_cmd->callback([&] {
    CounterexampleReport rep = counterexample_gl2();
    std::ostringstream os;
    os << "step                                value\n"
       << "deg L = deg M (rank-1, type m)      " << rep.deg_L << "\n"
       << "pullback mod torsion: deg L'        " << rep.deg_L_prime << "\n"
       << "twist by y_1+y_2: deg               " << rep.deg_L_saturated << "\n"
       << "tensor of the two lines             " << rep.deg_tensor << "\n"
       << "untwist by -y_1-y_2: deg N          " << rep.deg_N << "\n"
       << "descend (type m): deg saturation    " << rep.deg_saturation << "\n"
       << "witness filtration slope            " << rep.witness_slope.str() << "\n"
       << (rep.naive_test_fails
               ? "naive degree test fails: the degree-1 subsheaf violates <= 0\n"
               : "naive degree test unexpectedly passes\n");
    emit(opt, counterexample_json(rep), os.str());
  });

  // charts
  auto* charts_cmd = app.add_subcommand("charts", "degeneration chart atlas");
  Int charts_d = 2;
  bool charts_verify = false;
  charts_cmd->add_option("--d", charts_d, "number of base coordinates")->required();
  charts_cmd->add_flag("--verify", charts_verify, "check the atlas identities");
  charts_cmd->callback([&] {
    if (charts_d < 2) throw std::invalid_argument("charts: need d >= 2");
    if (!charts_verify) {
      json arr = json::array();
      std::ostringstream os;
      for (Int ell = 1; ell <= charts_d - 1; ++ell) {
        MonomialMap t = degeneration_transition(ell, charts_d);
        arr.push_back(mat_json(t.exponents));
        os << "transition " << ell << " -> " << (ell + 1) << ":\n" << t.exponents << "\n";
      }
      emit(opt, json{{"transitions", arr}}, os.str());
      return;
    }
    bool all_ok = true;
    json checks = json::array();
    std::ostringstream os;
    auto report = [&](const std::string& name, bool pass, const IntMat* offending) {
      checks.push_back({{"name", name}, {"pass", pass}});
      os << name << ": " << (pass ? "pass" : "FAIL") << "\n";
      if (!pass && offending) os << *offending << "\n";
      all_ok = all_ok && pass;
    };
    std::vector<MonomialMap> trans;
    for (Int ell = 1; ell <= charts_d - 1; ++ell)
      trans.push_back(degeneration_transition(ell, charts_d));
    for (size_t i = 0; i < trans.size(); ++i)
      report("unimodular transition " + std::to_string(i + 1), trans[i].unimodular(),
             &trans[i].exponents);
    for (size_t i = 0; i + 1 < trans.size(); ++i) {
      IntMat prod = trans[i + 1].exponents * trans[i].exponents;
      MonomialMap comp = trans[i + 1].after(trans[i]);
      report("cocycle " + std::to_string(i + 1) + "->" + std::to_string(i + 3),
             comp.exponents == prod, &prod);
    }
    std::vector<IntMat> w = gm_action(charts_d);
    for (Int ell = 1; ell <= charts_d - 1; ++ell) {
      IntMat expect = trans[static_cast<size_t>(ell - 1)].exponents * w[static_cast<size_t>(ell - 1)];
      report("torus equivariance chart " + std::to_string(ell),
             w[static_cast<size_t>(ell)] == expect, &expect);
    }
    MonomialMap lhs = resolution_transition().after(resolution_embedding(1));
    MonomialMap rhs = resolution_embedding(2).after(degeneration_transition(1, 2));
    report("resolution embedding compatibility", lhs.exponents == rhs.exponents, &rhs.exponents);
    emit(opt, json{{"d", charts_d}, {"checks", checks}, {"pass", all_ok}}, os.str());
    if (!all_ok) std::exit(kExitInternal);
  });

  // selftest
  auto* selftest_cmd = app.add_subcommand("selftest", "run the full invariant suite");
  selftest_cmd->callback([&] {
    auto results = run_selftest();
    bool all_ok = true;
    json arr = json::array();
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
      if (!r.detail.empty()) os << "  [" << r.detail << "]";
      os << "\n";
      arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
      all_ok = all_ok && r.pass;
    }
    emit(opt, json{{"checks", arr}, {"pass", all_ok}}, os.str());
    if (!all_ok) std::exit(kExitInternal);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitOk;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
