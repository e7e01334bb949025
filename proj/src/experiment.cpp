#include "olp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <thread>

#include "olp/errors.hpp"
#include "olp/greedy.hpp"
#include "olp/numeric.hpp"
#include "olp/paths.hpp"
#include "olp/unit_union.hpp"

namespace olp {

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::explicit_sample: return "explicit";
        case Backend::lazy: return "lazy";
        case Backend::unit: return "unit";
    }
    return "?";
}

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::lmax_exact: return "lmax_exact";
        case Measure::greedy_K: return "greedy_K";
        case Measure::count_paths: return "count_paths";
        case Measure::unit_Y: return "unit_Y";
        case Measure::min_extension: return "min_extension";
    }
    return "?";
}

Backend backend_from_name(const std::string& s) {
    if (s == "explicit") return Backend::explicit_sample;
    if (s == "lazy") return Backend::lazy;
    if (s == "unit") return Backend::unit;
    throw error("unknown backend: " + s);
}

Measure measure_from_name(const std::string& s) {
    if (s == "lmax_exact") return Measure::lmax_exact;
    if (s == "greedy_K") return Measure::greedy_K;
    if (s == "count_paths") return Measure::count_paths;
    if (s == "unit_Y") return Measure::unit_Y;
    if (s == "min_extension") return Measure::min_extension;
    throw error("unknown measure: " + s);
}

void validate_config(const ExperimentConfig& cfg) {
    if (cfg.r < 2 || cfg.n < cfg.r) throw error("config: need r >= 2 and n >= r");
    if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw error("config: p must lie in [0,1]");
    if (cfg.trials < 1) throw error("config: trials must be >= 1");
    if (cfg.threads < 1) throw error("config: threads must be >= 1");
    const bool needs_explicit = cfg.measure == Measure::lmax_exact ||
                                cfg.measure == Measure::count_paths ||
                                cfg.measure == Measure::min_extension;
    if (needs_explicit && cfg.backend != Backend::explicit_sample) {
        throw error("config: " + measure_name(cfg.measure) +
                    " requires the explicit backend");
    }
    if (cfg.measure == Measure::unit_Y && cfg.backend != Backend::unit) {
        throw error("config: unit_Y requires the unit backend");
    }
    if (cfg.measure == Measure::greedy_K && cfg.backend == Backend::unit) {
        throw error("config: greedy_K requires the explicit or lazy backend");
    }
    if (cfg.backend == Backend::lazy && !(cfg.p > 0.0)) {
        throw error("config: the lazy backend needs p > 0");
    }
    if (cfg.measure == Measure::count_paths && cfg.ell < 1) {
        throw error("config: count_paths needs ell >= 1");
    }
    if (cfg.measure == Measure::min_extension && !(cfg.min_ext_d > 0.0)) {
        throw error("config: min_extension needs d > 0");
    }
}

double resolve_p(const std::string& expr, double n, double c) {
    // literal number
    {
        std::size_t used = 0;
        try {
            const double value = std::stod(expr, &used);
            if (used == expr.size()) return value;
        } catch (const std::exception&) {
        }
    }
    std::string rest = expr;
    double coeff = 1.0;
    const auto star = rest.find("*");
    if (star != std::string::npos) {
        const std::string head = rest.substr(0, star);
        if (head == "c") {
            coeff = c;
        } else {
            try {
                std::size_t used = 0;
                coeff = std::stod(head, &used);
                if (used != head.size()) throw error("");
            } catch (const std::exception&) {
                throw error("bad p expression: " + expr);
            }
        }
        rest = rest.substr(star + 1);
    }
    if (rest.size() < 3 || rest[0] != 'n' || rest[1] != '^') {
        throw error("bad p expression: " + expr);
    }
    double exponent = 0.0;
    try {
        std::size_t used = 0;
        exponent = std::stod(rest.substr(2), &used);
        if (used != rest.size() - 2) throw error("");
    } catch (const std::exception&) {
        throw error("bad p expression: " + expr);
    }
    return coeff * std::pow(n, exponent);
}

namespace {

TrialRecord run_one(const ExperimentConfig& cfg, std::uint64_t trial) {
    TrialRecord rec;
    rec.trial = trial;
    const RngSeed seed{cfg.master_seed, trial};
    rec.seed = derive_seed(seed);
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (cfg.backend) {
            case Backend::explicit_sample: {
                SampleOptions opts;
                opts.max_expected_edges = cfg.max_expected_edges;
                const auto h = sample_explicit(cfg.n, cfg.r, cfg.p, seed, opts);
                rec.edges = h.edge_count();
                switch (cfg.measure) {
                    case Measure::lmax_exact:
                        rec.value = static_cast<double>(longest_path(h).lmax);
                        break;
                    case Measure::greedy_K:
                        rec.value = static_cast<double>(greedy_path(h).step_count());
                        break;
                    case Measure::count_paths:
                        rec.value = count_paths(h, cfg.ell).approx();
                        break;
                    case Measure::min_extension: {
                        const auto exts = min_extension_lengths(h);
                        const double d = cfg.min_ext_d;
                        bool all_covered = true;
                        for (std::uint32_t v = 1;
                             static_cast<double>(v) <= cfg.n - d; ++v) {
                            if (exts[v] == kNoExtension || exts[v] > d) {
                                all_covered = false;
                                break;
                            }
                        }
                        rec.value = all_covered ? 1.0 : 0.0;
                        break;
                    }
                    default:
                        throw error("unsupported measure for explicit backend");
                }
                break;
            }
            case Backend::lazy: {
                const auto trace = greedy_path_lazy(cfg.n, cfg.r, cfg.p, seed);
                rec.edges = trace.step_count();
                rec.value = static_cast<double>(trace.step_count());
                break;
            }
            case Backend::unit: {
                const auto mask = sample_unit_mask(cfg.n, cfg.r, cfg.p, seed);
                std::uint64_t present = 0;
                for (auto b : mask.present) present += b;
                rec.edges = present;
                rec.value = static_cast<double>(unit_union_greedy(mask).count);
                break;
            }
        }
    } catch (const error& e) {
        rec.error = e.what();
        rec.value = std::nan("");
    }
    const auto stop = std::chrono::steady_clock::now();
    rec.runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return rec;
}

} // namespace

std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg) {
    validate_config(cfg);
    std::vector<TrialRecord> records(cfg.trials);
    if (cfg.threads == 1) {
        for (std::uint64_t t = 0; t < cfg.trials; ++t) records[t] = run_one(cfg, t);
        return records;
    }
    std::atomic<std::uint64_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::uint64_t t = next.fetch_add(1);
            if (t >= cfg.trials) return;
            records[t] = run_one(cfg, t);
        }
    };
    std::vector<std::thread> pool;
    const std::uint32_t width =
        static_cast<std::uint32_t>(std::min<std::uint64_t>(cfg.threads, cfg.trials));
    pool.reserve(width);
    for (std::uint32_t i = 0; i < width; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return records;
}

SummaryStats aggregate(const std::vector<TrialRecord>& records) {
    SummaryStats s;
    double sum = 0.0;
    for (const auto& rec : records) {
        if (rec.failed()) {
            ++s.failed;
            continue;
        }
        if (s.used == 0) {
            s.min = s.max = rec.value;
        } else {
            s.min = std::min(s.min, rec.value);
            s.max = std::max(s.max, rec.value);
        }
        ++s.used;
        sum += rec.value;
        ++s.histogram[rec.value];
    }
    if (s.used == 0) throw error("aggregate: every record failed");
    s.mean = sum / static_cast<double>(s.used);
    if (s.used > 1) {
        double ss = 0.0;
        for (const auto& rec : records) {
            if (rec.failed()) continue;
            const double d = rec.value - s.mean;
            ss += d * d;
        }
        const double var = ss / static_cast<double>(s.used - 1);
        s.se = std::sqrt(var / static_cast<double>(s.used));
    }
    s.ci_lo = s.mean - 1.96 * s.se;
    s.ci_hi = s.mean + 1.96 * s.se;
    return s;
}

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        else out += ch;
    }
    out += "\"";
    return out;
}

std::string measure_field(const ExperimentConfig& cfg) {
    switch (cfg.measure) {
        case Measure::count_paths:
            return "count_paths(" + std::to_string(cfg.ell) + ")";
        case Measure::min_extension:
            return "min_extension(" + format_double(cfg.min_ext_d) + ")";
        default:
            return measure_name(cfg.measure);
    }
}

} // namespace

void export_csv(std::ostream& out, const ExperimentConfig& cfg,
                const std::vector<TrialRecord>& records) {
    out << "trial,seed,n,r,p,edges,measure,value,error,runtime_ms\n";
    const std::string measure = measure_field(cfg);
    for (const auto& rec : records) {
        out << rec.trial << ',' << rec.seed << ',' << cfg.n << ',' << cfg.r
            << ',' << format_double(cfg.p) << ',' << rec.edges << ',' << measure
            << ',' << (rec.failed() ? "" : format_double(rec.value)) << ','
            << csv_escape(rec.error) << ',' << format_double(rec.runtime_ms)
            << '\n';
    }
}

void export_csv_file(const std::string& path, const ExperimentConfig& cfg,
                     const std::vector<TrialRecord>& records) {
    std::ofstream out(path);
    if (!out) throw error("cannot open for writing: " + path);
    export_csv(out, cfg, records);
    if (!out) throw error("write failed: " + path);
}

nlohmann::json experiment_json(const ExperimentConfig& cfg,
                               const std::vector<TrialRecord>& records,
                               const SummaryStats& summary,
                               const std::vector<CheckResult>& checks) {
    using nlohmann::json;
    json config{{"n", cfg.n},
                {"r", cfg.r},
                {"p", cfg.p},
                {"trials", cfg.trials},
                {"master_seed", cfg.master_seed},
                {"backend", backend_name(cfg.backend)},
                {"measure", measure_field(cfg)},
                {"threads", cfg.threads},
                {"max_expected_edges", cfg.max_expected_edges}};
    if (!cfg.p_expr.empty()) config["p_expr"] = cfg.p_expr;

    json recs = json::array();
    for (const auto& rec : records) {
        json j{{"trial", rec.trial},
               {"seed", rec.seed},
               {"edges", rec.edges},
               {"runtime_ms", rec.runtime_ms}};
        if (rec.failed()) {
            j["error"] = rec.error;
        } else {
            j["value"] = rec.value;
        }
        recs.push_back(std::move(j));
    }

    json hist = json::object();
    for (const auto& [v, c] : summary.histogram) hist[format_double(v)] = c;
    json summ{{"mean", summary.mean},   {"se", summary.se},
              {"ci_lo", summary.ci_lo}, {"ci_hi", summary.ci_hi},
              {"min", summary.min},     {"max", summary.max},
              {"used", summary.used},   {"failed", summary.failed},
              {"histogram", hist}};

    json chks = json::array();
    for (const auto& c : checks) {
        chks.push_back(json{{"name", c.name}, {"pass", c.pass},
                            {"details", c.details}});
    }
    return json{{"config", config},
                {"rng_id", std::string(kRngId)},
                {"records", recs},
                {"summary", summ},
                {"checks", chks}};
}

void export_json_file(const std::string& path, const nlohmann::json& doc) {
    std::ofstream out(path);
    if (!out) throw error("cannot open for writing: " + path);
    out << doc.dump(2) << '\n';
    if (!out) throw error("write failed: " + path);
}

std::vector<TrialRecord> records_from_json(const nlohmann::json& doc) {
    std::vector<TrialRecord> out;
    for (const auto& j : doc.at("records")) {
        TrialRecord rec;
        rec.trial = j.at("trial").get<std::uint64_t>();
        rec.seed = j.at("seed").get<std::uint64_t>();
        rec.edges = j.at("edges").get<std::uint64_t>();
        rec.runtime_ms = j.at("runtime_ms").get<double>();
        if (j.contains("error")) {
            rec.error = j.at("error").get<std::string>();
            rec.value = std::nan("");
        } else {
            rec.value = j.at("value").get<double>();
        }
        out.push_back(std::move(rec));
    }
    return out;
}

} // namespace olp
