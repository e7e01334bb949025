#ifndef OLP_EXPERIMENT_HPP
#define OLP_EXPERIMENT_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "olp/rng.hpp"
#include "olp/sampling.hpp"

namespace olp {

enum class Backend { explicit_sample, lazy, unit };

enum class Measure {
    lmax_exact,    // explicit backend only
    greedy_K,      // explicit or lazy
    count_paths,   // explicit only; needs ell
    unit_Y,        // unit backend only
    min_extension, // explicit only; needs d, value is the all-covered indicator
};

std::string backend_name(Backend b);
std::string measure_name(Measure m);
Backend backend_from_name(const std::string& s);
Measure measure_from_name(const std::string& s);

struct ExperimentConfig {
    std::uint32_t n = 0;
    std::uint32_t r = 2;
    double p = 0.0;          // resolved numeric probability
    std::string p_expr;      // original expression when one was given
    std::uint64_t trials = 1;
    std::uint64_t master_seed = kDefaultMasterSeed;
    Backend backend = Backend::explicit_sample;
    Measure measure = Measure::lmax_exact;
    std::uint64_t ell = 0;    // count_paths target length
    double min_ext_d = 0.0;   // min_extension span
    std::uint32_t threads = 1;
    std::uint64_t max_expected_edges = SampleOptions{}.max_expected_edges;
};

/// Throws olp::error when the configuration is inconsistent
/// (e.g. lmax_exact with the lazy backend, zero trials).
void validate_config(const ExperimentConfig& cfg);

/// Resolves "0.25", "n^-2.42" or "c*n^-2.5" (also "<num>*n^<num>") into a
/// numeric probability; c supplies the coefficient for the "c*" form.
double resolve_p(const std::string& expr, double n, double c);

struct TrialRecord {
    std::uint64_t trial = 0;
    std::uint64_t seed = 0;   // derived engine seed for this trial
    std::uint64_t edges = 0;  // realized edges (trace/mask size for lazy/unit)
    double value = 0.0;
    std::string error;        // empty on success
    double runtime_ms = 0.0;  // wall time; excluded from determinism contracts

    bool failed() const { return !error.empty(); }
};

/// Runs cfg.trials independent trials on a pool of cfg.threads workers.
/// Trial t uses RngSeed{master_seed, t}, so results are a pure function of
/// the config regardless of pool width or scheduling; records are returned
/// in trial order. Per-trial failures (budget, overflow) are recorded, never
/// thrown.
std::vector<TrialRecord> run_trials(const ExperimentConfig& cfg);

struct SummaryStats {
    double mean = 0.0;
    double se = 0.0;     // sample standard error of the mean
    double ci_lo = 0.0;  // mean -/+ 1.96 se
    double ci_hi = 0.0;
    double min = 0.0;
    double max = 0.0;
    std::map<double, std::uint64_t> histogram;
    std::uint64_t used = 0;
    std::uint64_t failed = 0;
};

/// Standard estimators over the successful records; failed records are
/// excluded and counted. Throws olp::error when every record failed.
SummaryStats aggregate(const std::vector<TrialRecord>& records);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

/// CSV schema: trial,seed,n,r,p,edges,measure,value,error,runtime_ms.
/// Everything except runtime_ms is a pure function of the config.
void export_csv(std::ostream& out, const ExperimentConfig& cfg,
                const std::vector<TrialRecord>& records);
void export_csv_file(const std::string& path, const ExperimentConfig& cfg,
                     const std::vector<TrialRecord>& records);

/// Full result envelope: {config, rng_id, records, summary, checks}.
nlohmann::json experiment_json(const ExperimentConfig& cfg,
                               const std::vector<TrialRecord>& records,
                               const SummaryStats& summary,
                               const std::vector<CheckResult>& checks = {});
void export_json_file(const std::string& path, const nlohmann::json& doc);

/// Parses the records array of an experiment_json document back into
/// TrialRecord values (round-trip helper).
std::vector<TrialRecord> records_from_json(const nlohmann::json& doc);

} // namespace olp

#endif
