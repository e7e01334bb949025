#ifndef OLP_JSON_IO_HPP
#define OLP_JSON_IO_HPP

#include <json.hpp>

#include "olp/greedy.hpp"
#include "olp/paths.hpp"
#include "olp/regimes.hpp"
#include "olp/series.hpp"

namespace olp {

/// {lmax, edges: [[v, ...], ...], histogram: {"length": count}}
nlohmann::json witness_json(const PathWitness& w);

/// {K, steps: [{edge: [v, ...], L}, ...], terminal}
nlohmann::json trace_json(const GreedyTrace& t);

nlohmann::json band_json(const Band& b);

nlohmann::json regime_json(const RegimePrediction& rp);

} // namespace olp

#endif
