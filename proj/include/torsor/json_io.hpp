#ifndef TORSOR_JSON_IO_HPP
#define TORSOR_JSON_IO_HPP

#include <json.hpp>

#include "torsor/alcove.hpp"
#include "torsor/charts.hpp"
#include "torsor/fibers.hpp"
#include "torsor/mckay.hpp"
#include "torsor/stability.hpp"

namespace torsor {

using json = nlohmann::ordered_json;

json rat_json(const Rat& r);
Rat rat_from_json(const json& j);

json vec_json(const RatVec& v);
json vec_json(const IntVec& v);
json point_json(const ApartmentPoint& p);
json mat_json(const IntMat& m);

json facet_json(const Facet& f);
json type_report_json(const RootDatum& rd, const CyclicType& tau);
json mckay_json(const McKayData& md);
json fiber_json(const RootDatum& rd, const FiberDescription& fd);
json verdict_json(const Verdict& v, Mode mode);
json counterexample_json(const CounterexampleReport& rep);

/// Reads {"gammas":[...],"ranks":[...],"degrees":["p/q",...],"total_deg":"p/q"}.
WeightedFiltration filtration_from_json(const json& j);
json filtration_json(const WeightedFiltration& f);

}  // namespace torsor

#endif  // TORSOR_JSON_IO_HPP
