#include "olp/json_io.hpp"

namespace olp {

using nlohmann::json;

json witness_json(const PathWitness& w) {
    json edges = json::array();
    for (const auto& e : w.witness) edges.push_back(e.vertices);
    json hist = json::object();
    for (const auto& [len, cnt] : w.length_histogram) {
        hist[std::to_string(len)] = cnt;
    }
    return json{{"lmax", w.lmax}, {"edges", edges}, {"histogram", hist}};
}

json trace_json(const GreedyTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) {
        steps.push_back(json{{"edge", s.edge.vertices}, {"L", s.extension}});
    }
    return json{{"K", t.step_count()},
                {"steps", steps},
                {"terminal", t.terminal}};
}

json band_json(const Band& b) {
    return json{{"lower", b.lower},
                {"upper", b.upper},
                {"lower_formula", b.lower_formula},
                {"upper_formula", b.upper_formula}};
}

json regime_json(const RegimePrediction& rp) {
    json out{{"regime", rp.label}, {"band", band_json(rp.band)},
             {"notes", rp.notes}};
    if (rp.regime == Regime::sparse_exact) out["ell"] = rp.sparse_ell;
    return out;
}

} // namespace olp
