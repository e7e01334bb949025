// Command-line front end: sampling, solving, prediction, and experiment
// workflows. Path lengths are always edge counts. Exit codes: 0 success,
// 1 usage or runtime error (one-line diagnostic on stderr), 2 check failed.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "olp/errors.hpp"
#include "olp/experiment.hpp"
#include "olp/gof.hpp"
#include "olp/greedy.hpp"
#include "olp/json_io.hpp"
#include "olp/numeric.hpp"
#include "olp/paths.hpp"
#include "olp/regimes.hpp"
#include "olp/sampling.hpp"
#include "olp/series.hpp"
#include "olp/unit_union.hpp"

namespace {

using nlohmann::json;
using namespace olp;

struct PFlags {
    std::optional<double> p;
    std::string p_expr;
    double c = 1.0;
};

void add_p_flags(CLI::App* cmd, PFlags& flags) {
    cmd->add_option("--p", flags.p, "edge probability, literal value in [0,1]");
    cmd->add_option("--p-expr", flags.p_expr,
                    "edge probability as an expression of n: 'n^-2.42', "
                    "'c*n^-2.5' (coefficient from --c), or '<num>*n^<num>'");
    cmd->add_option("--c", flags.c, "coefficient for the c* form of --p-expr");
}

double resolve_p_flags(const PFlags& flags, double n) {
    if (flags.p.has_value() && !flags.p_expr.empty()) {
        throw error("give either --p or --p-expr, not both");
    }
    if (flags.p.has_value()) return *flags.p;
    if (!flags.p_expr.empty()) return resolve_p(flags.p_expr, n, flags.c);
    throw error("one of --p or --p-expr is required");
}

void print_or_dump(bool as_json, const json& doc, const std::string& text) {
    if (as_json) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

std::string band_text(const Band& b) {
    return "[" + format_double(b.lower) + ", " + format_double(b.upper) + "]";
}

int run(int argc, char** argv) {
    CLI::App app{
        "ordered loose paths in random r-uniform hypergraphs: samplers, "
        "exact/greedy solvers, closed-form predictors (regimes T1.1-T1.5), "
        "and a reproducible Monte Carlo harness. Path length = edge count."};
    app.require_subcommand(1);

    std::uint64_t seed = kDefaultMasterSeed;
    app.add_option("--seed", seed,
                   "master seed (fixed default keeps bare runs reproducible)")
        ->capture_default_str();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    int exit_code = 0;

    // ---- sample ----------------------------------------------------------
    auto* sample = app.add_subcommand(
        "sample", "draw H(r)(n,p); every r-set is an edge with probability p");
    std::uint32_t s_n = 0, s_r = 2;
    PFlags s_p;
    std::string s_out;
    std::uint64_t s_budget = SampleOptions{}.max_expected_edges;
    sample->add_option("--n", s_n, "vertex count (labels 1..n)")->required();
    sample->add_option("--r", s_r, "edge size r >= 2")->required();
    add_p_flags(sample, s_p);
    sample->add_option("--out", s_out, "edge-list output path (header 'n r')");
    sample->add_option("--max-edges", s_budget,
                       "budget on the expected edge count");
    sample->callback([&] {
        const double p = resolve_p_flags(s_p, s_n);
        SampleOptions opts;
        opts.max_expected_edges = s_budget;
        const auto h = sample_explicit(s_n, s_r, p, {seed, 0}, opts);
        if (!s_out.empty()) write_edge_list_file(s_out, h);
        json doc{{"n", s_n},
                 {"r", s_r},
                 {"p", p},
                 {"edges", h.edge_count()},
                 {"seed", seed}};
        if (!s_out.empty()) doc["out"] = s_out;
        print_or_dump(as_json, doc,
                      "edges: " + std::to_string(h.edge_count()) + " (p=" +
                          format_double(p) + ", seed=" + std::to_string(seed) +
                          ")\n");
    });

    // ---- lmax ------------------------------------------------------------
    auto* lmax = app.add_subcommand(
        "lmax",
        "exact longest ordered loose path in edge counts, the quantity the "
        "T1.1-T1.5 bands predict (dynamic program with witness)");
    std::string l_file;
    std::uint32_t l_n = 0, l_r = 2;
    PFlags l_p;
    lmax->add_option("--edges-file", l_file, "read an edge-list file");
    lmax->add_option("--n", l_n, "vertex count (sampled mode)");
    lmax->add_option("--r", l_r, "edge size (sampled mode)");
    add_p_flags(lmax, l_p);
    lmax->callback([&] {
        OrderedHypergraph h = l_file.empty()
                                  ? [&] {
                                        if (l_n == 0) {
                                            throw error(
                                                "lmax: give --edges-file or "
                                                "--n/--r/--p");
                                        }
                                        return sample_explicit(
                                            l_n, l_r, resolve_p_flags(l_p, l_n),
                                            {seed, 0});
                                    }()
                                  : read_edge_list_file(l_file);
        const auto w = longest_path(h);
        std::string text = "lmax: " + std::to_string(w.lmax) + "\n";
        if (!w.witness.empty()) {
            text += "witness:";
            text += " " + std::to_string(w.witness.front().first());
            for (const auto& e : w.witness) {
                for (std::size_t j = 1; j < e.vertices.size(); ++j) {
                    text += " " + std::to_string(e.vertices[j]);
                }
            }
            text += "\n";
        }
        print_or_dump(as_json, witness_json(w), text);
    });

    // ---- greedy ----------------------------------------------------------
    auto* greedy = app.add_subcommand(
        "greedy",
        "greedy walk taking the shortest extension each step (T1.1/T1.2 lower "
        "bound construction)");
    std::uint32_t g_n = 0, g_r = 2;
    PFlags g_p;
    std::string g_backend = "lazy";
    greedy->add_option("--n", g_n, "vertex count")->required();
    greedy->add_option("--r", g_r, "edge size")->required();
    add_p_flags(greedy, g_p);
    greedy->add_option("--backend", g_backend,
                       "lazy (no materialization) or explicit")
        ->check(CLI::IsMember({"lazy", "explicit"}));
    greedy->callback([&] {
        const double p = resolve_p_flags(g_p, g_n);
        GreedyTrace t;
        if (g_backend == "lazy") {
            t = greedy_path_lazy(g_n, g_r, p, {seed, 0});
        } else {
            t = greedy_path(sample_explicit(g_n, g_r, p, {seed, 0}));
        }
        print_or_dump(as_json, trace_json(t),
                      "K: " + std::to_string(t.step_count()) +
                          "\nterminal: " + std::to_string(t.terminal) + "\n");
    });

    // ---- count -----------------------------------------------------------
    auto* count = app.add_subcommand(
        "count",
        "exact number of ordered loose paths of length ell (the count whose "
        "T1.5 limit is Poisson)");
    std::string c_file;
    std::uint32_t c_n = 0, c_r = 2;
    std::uint64_t c_ell = 1;
    PFlags c_p;
    count->add_option("--ell", c_ell, "target path length (edge count)")
        ->required();
    count->add_option("--edges-file", c_file, "read an edge-list file");
    count->add_option("--n", c_n, "vertex count (sampled mode)");
    count->add_option("--r", c_r, "edge size (sampled mode)");
    add_p_flags(count, c_p);
    count->callback([&] {
        OrderedHypergraph h = c_file.empty()
                                  ? [&] {
                                        if (c_n == 0) {
                                            throw error(
                                                "count: give --edges-file or "
                                                "--n/--r/--p");
                                        }
                                        return sample_explicit(
                                            c_n, c_r, resolve_p_flags(c_p, c_n),
                                            {seed, 0});
                                    }()
                                  : read_edge_list_file(c_file);
        const auto pc = count_paths(h, c_ell);
        json doc{{"ell", pc.ell}, {"count", pc.str()}};
        print_or_dump(as_json, doc, "count: " + pc.str() + "\n");
    });

    // ---- unit ------------------------------------------------------------
    auto* unit = app.add_subcommand(
        "unit",
        "unit-length-only sub-hypergraph: greedy union of loose paths (T1.1 "
        "upper bound ingredient)");
    std::uint32_t u_n = 0, u_r = 2;
    PFlags u_p;
    unit->add_option("--n", u_n, "vertex count")->required();
    unit->add_option("--r", u_r, "edge size")->required();
    add_p_flags(unit, u_p);
    unit->callback([&] {
        const double p = resolve_p_flags(u_p, u_n);
        const auto mask = sample_unit_mask(u_n, u_r, p, {seed, 0});
        const auto res = unit_union_greedy(mask);
        std::uint64_t present = 0;
        for (auto b : mask.present) present += b;
        json doc{{"Y", res.count},
                 {"present_blocks", present},
                 {"positions", res.positions}};
        print_or_dump(as_json, doc,
                      "Y: " + std::to_string(res.count) +
                          "\npresent blocks: " + std::to_string(present) + "\n");
    });

    // ---- expect ----------------------------------------------------------
    auto* expect = app.add_subcommand(
        "expect",
        "mean greedy extension length (edge span per step, drives the T1.1 "
        "lower bound): series value plus closed-form sandwich");
    std::uint32_t e_r = 2;
    double e_p = 0.5, e_tol = 1e-10;
    expect->add_option("--r", e_r, "edge size r >= 2")->required();
    expect->add_option("--p", e_p, "edge probability in (0,1]")->required();
    expect->add_option("--tol", e_tol, "series tail tolerance")
        ->capture_default_str();
    expect->callback([&] {
        const auto res = expected_extension_series(e_r, e_p, e_tol);
        const auto band = expected_extension_bounds(e_r, e_p);
        json doc{{"value", res.value},
                 {"truncation_index", res.truncation_index},
                 {"tail_bound", res.tail_bound},
                 {"band", band_json(band)}};
        char headline[32];
        std::snprintf(headline, sizeof(headline), "%.4g", res.value);
        print_or_dump(as_json, doc,
                      "mean extension: " + std::string(headline) + " (" +
                          format_double(res.value) + ")\nband: " +
                          band_text(band) + "\nterms: " +
                          std::to_string(res.truncation_index + 1) +
                          ", tail bound: " + format_double(res.tail_bound) +
                          "\n");
    });

    // ---- predict ---------------------------------------------------------
    auto* predict = app.add_subcommand(
        "predict",
        "classify (n, r, p) into a regime (T1.1 dense .. T1.5 sparse) and "
        "report the predicted lmax band in edge counts");
    double pr_n = 0;
    std::uint32_t pr_r = 2;
    PFlags pr_p;
    predict->add_option("--n", pr_n, "vertex count")->required();
    predict->add_option("--r", pr_r, "edge size")->required();
    add_p_flags(predict, pr_p);
    predict->callback([&] {
        const double p = resolve_p_flags(pr_p, pr_n);
        const auto res = classify_regime(pr_n, pr_r, p);
        json doc = regime_json(res);
        doc["p"] = p;
        print_or_dump(as_json, doc,
                      "regime: " + res.label + "\nband: " + band_text(res.band) +
                          "\np: " + format_double(p) + "\nnotes: " + res.notes +
                          "\n");
    });

    // ---- ell0 ------------------------------------------------------------
    auto* ell0 = app.add_subcommand(
        "ell0",
        "solve (n/x)^(r-1+1/x) p = 1 for the T1.4 log-regime length scale");
    double el_n = 0;
    std::uint32_t el_r = 3;
    PFlags el_p;
    ell0->add_option("--n", el_n, "vertex count")->required();
    ell0->add_option("--r", el_r, "edge size")->required();
    add_p_flags(ell0, el_p);
    ell0->callback([&] {
        const double p = resolve_p_flags(el_p, el_n);
        const auto res = solve_ell0(el_n, el_r, p);
        json doc{{"root", res.root},
                 {"bracket", {res.bracket_lo, res.bracket_hi}},
                 {"residual", res.residual}};
        print_or_dump(as_json, doc,
                      "root: " + format_double(res.root) + "\nbracket: [" +
                          format_double(res.bracket_lo) + ", " +
                          format_double(res.bracket_hi) +
                          "]\nresidual: " + format_double(res.residual) + "\n");
    });

    // ---- experiment ------------------------------------------------------
    auto* exp = app.add_subcommand(
        "experiment",
        "seeded Monte Carlo batch: trials, aggregation, optional band check");
    ExperimentConfig cfg;
    PFlags x_p;
    std::string x_backend = "explicit", x_measure = "lmax_exact";
    std::string x_csv, x_json_out;
    bool x_check_band = false;
    double x_slack = 0.01;
    exp->add_option("--n", cfg.n, "vertex count")->required();
    exp->add_option("--r", cfg.r, "edge size")->required();
    add_p_flags(exp, x_p);
    exp->add_option("--trials", cfg.trials, "number of trials")->required();
    exp->add_option("--backend", x_backend, "explicit | lazy | unit")
        ->check(CLI::IsMember({"explicit", "lazy", "unit"}));
    exp->add_option("--measure", x_measure,
                    "lmax_exact | greedy_K | count_paths | unit_Y | "
                    "min_extension")
        ->check(CLI::IsMember({"lmax_exact", "greedy_K", "count_paths",
                               "unit_Y", "min_extension"}));
    exp->add_option("--ell", cfg.ell, "target length for count_paths");
    exp->add_option("--d", cfg.min_ext_d, "span for min_extension");
    exp->add_option("--threads", cfg.threads, "worker pool width")
        ->capture_default_str();
    exp->add_option("--max-edges", cfg.max_expected_edges,
                    "expected-edge budget for the explicit backend");
    exp->add_option("--csv", x_csv, "write per-trial records as CSV");
    exp->add_option("--json-out", x_json_out, "write the JSON result envelope");
    exp->add_flag("--check-band", x_check_band,
                  "compare the mean against the predicted regime band");
    exp->add_option("--slack", x_slack, "band check slack")
        ->capture_default_str();
    exp->callback([&] {
        cfg.p = resolve_p_flags(x_p, cfg.n);
        cfg.p_expr = x_p.p_expr;
        cfg.master_seed = seed;
        cfg.backend = backend_from_name(x_backend);
        cfg.measure = measure_from_name(x_measure);
        const auto records = run_trials(cfg);
        const auto summary = aggregate(records);
        std::vector<CheckResult> checks;
        if (x_check_band) {
            const auto regime = classify_regime(cfg.n, cfg.r, cfg.p);
            const auto res = band_check(summary, regime.band, x_slack);
            checks.push_back(
                {"band:" + regime.label, res.pass,
                 "mean=" + format_double(summary.mean) + " widened band=[" +
                     format_double(res.lo) + ", " + format_double(res.hi) +
                     "] margin=" + format_double(res.margin)});
        }
        const auto doc = experiment_json(cfg, records, summary, checks);
        if (!x_csv.empty()) export_csv_file(x_csv, cfg, records);
        if (!x_json_out.empty()) export_json_file(x_json_out, doc);
        std::string text = "trials: " + std::to_string(cfg.trials) +
                           " (failed: " + std::to_string(summary.failed) +
                           ")\nmean: " + format_double(summary.mean) + "  se: " +
                           format_double(summary.se) + "\nci95: [" +
                           format_double(summary.ci_lo) + ", " +
                           format_double(summary.ci_hi) + "]\nrange: [" +
                           format_double(summary.min) + ", " +
                           format_double(summary.max) + "]\n";
        for (const auto& chk : checks) {
            text += std::string(chk.pass ? "[pass] " : "[fail] ") + chk.name +
                    " " + chk.details + "\n";
        }
        print_or_dump(as_json, doc, text);
        for (const auto& chk : checks) {
            if (!chk.pass) exit_code = 2;
        }
    });

    // ---- poisson-test ------------------------------------------------------
    auto* pt = app.add_subcommand(
        "poisson-test",
        "sparse-regime limit (T1.5): distribution of length-ell path counts "
        "at p = c n^-(r-1+1/ell) against Poisson(c^ell/(ell(r-1)+1)!)");
    std::uint32_t pt_n = 0, pt_r = 3;
    std::uint64_t pt_ell = 2, pt_trials = 5000;
    double pt_c = 1.0, pt_threshold = 0.1;
    std::uint32_t pt_threads = 1;
    pt->add_option("--n", pt_n, "vertex count")->required();
    pt->add_option("--r", pt_r, "edge size, r >= 3")->required();
    pt->add_option("--ell", pt_ell, "target path length, ell >= 2")
        ->capture_default_str();
    pt->add_option("--c", pt_c, "coefficient in p = c n^-(r-1+1/ell)")
        ->capture_default_str();
    pt->add_option("--trials", pt_trials, "number of trials (>= 500)")
        ->capture_default_str();
    pt->add_option("--tv-threshold", pt_threshold,
                   "pass if TV distance stays below this")
        ->capture_default_str();
    pt->add_option("--threads", pt_threads, "worker pool width")
        ->capture_default_str();
    pt->callback([&] {
        if (pt_r < 3 || pt_ell < 2) {
            throw error("poisson-test: needs r >= 3 and ell >= 2");
        }
        ExperimentConfig pcfg;
        pcfg.n = pt_n;
        pcfg.r = pt_r;
        pcfg.p = pt_c * std::pow(static_cast<double>(pt_n),
                                 -(pt_r - 1.0 + 1.0 / static_cast<double>(pt_ell)));
        pcfg.trials = pt_trials;
        pcfg.master_seed = seed;
        pcfg.backend = Backend::explicit_sample;
        pcfg.measure = Measure::count_paths;
        pcfg.ell = pt_ell;
        pcfg.threads = pt_threads;
        const double lambda = poisson_lambda(pt_c, pt_r, pt_ell);
        const auto records = run_trials(pcfg);
        std::vector<std::uint64_t> counts;
        counts.reserve(records.size());
        for (const auto& rec : records) {
            if (!rec.failed()) {
                counts.push_back(static_cast<std::uint64_t>(rec.value));
            }
        }
        const auto rep = poisson_gof(counts, lambda);
        const bool pass = rep.tv < pt_threshold;
        json doc{{"n", pt_n},
                 {"r", pt_r},
                 {"ell", pt_ell},
                 {"c", pt_c},
                 {"p", pcfg.p},
                 {"lambda", lambda},
                 {"trials", rep.trials},
                 {"tv", rep.tv},
                 {"chi_square", rep.chi_square},
                 {"dof", rep.dof},
                 {"tv_threshold", pt_threshold},
                 {"pass", pass}};
        print_or_dump(as_json, doc,
                      "p: " + format_double(pcfg.p) + "\nlambda: " +
                          format_double(lambda) + "\ntv: " + format_double(rep.tv) +
                          " (threshold " + format_double(pt_threshold) +
                          ")\nchi-square: " + format_double(rep.chi_square) +
                          " with dof " + std::to_string(rep.dof) + "\n" +
                          (pass ? "[pass]" : "[fail]") + "\n");
        if (!pass) exit_code = 2;
    });

    // let --seed / --json appear after the subcommand name
    for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help and friends
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const olp::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
