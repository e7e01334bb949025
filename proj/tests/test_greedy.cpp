#include "doctest.h"

#include <cmath>

#include "olp/greedy.hpp"
#include "olp/json_io.hpp"
#include "olp/paths.hpp"
#include "olp/series.hpp"
#include "test_util.hpp"

using namespace olp;

namespace {

void check_trace_is_path(const GreedyTrace& t, std::uint32_t r) {
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto& e = t.steps[i].edge;
        REQUIRE(e.vertices.size() == r);
        for (std::size_t j = 1; j < r; ++j) REQUIRE(e.vertices[j] > e.vertices[j - 1]);
        REQUIRE(t.steps[i].extension == e.length());
        if (i > 0) REQUIRE(t.steps[i - 1].edge.last() == e.first());
    }
    if (!t.steps.empty()) {
        CHECK(t.steps.front().edge.first() == 1);
        CHECK(t.terminal == t.steps.back().edge.last());
    }
}

} // namespace

TEST_CASE("greedy walk on hand instances") {
    auto five = testutil::make_graph(5, 2, {{1, 2}, {2, 5}, {1, 3}, {3, 4}, {4, 5}});
    auto t = greedy_path(five);
    REQUIRE(t.step_count() == 2);
    CHECK(t.steps[0].edge == Edge{{1, 2}});
    CHECK(t.steps[1].edge == Edge{{2, 5}});
    CHECK(t.terminal == 5);
    CHECK(t.step_count() < longest_path(five).lmax); // greedy is not optimal here

    auto isolated = testutil::make_graph(5, 2, {{2, 3}, {3, 4}});
    CHECK(greedy_path(isolated).step_count() == 0); // nothing starts at vertex 1

    auto complete = testutil::make_graph(4, 2,
                                         {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    auto tc = greedy_path(complete);
    REQUIRE(tc.step_count() == 3);
    CHECK(tc.steps[0].edge == Edge{{1, 2}});
    CHECK(tc.steps[1].edge == Edge{{2, 3}});
    CHECK(tc.steps[2].edge == Edge{{3, 4}});
}

TEST_CASE("greedy ties break to the smallest internal tuple") {
    // both edges have last vertex 4; {1,2,4} is lexicographically first
    auto h = testutil::make_graph(4, 3, {{1, 3, 4}, {1, 2, 4}});
    auto t = greedy_path(h);
    REQUIRE(t.step_count() == 1);
    CHECK(t.steps[0].edge == Edge{{1, 2, 4}});
}

TEST_CASE("greedy trace is a valid path and never beats the optimum") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto h = testutil::random_small(10, (s % 2) ? 3 : 2, 0.4, 4000 + s);
        auto t = greedy_path(h);
        check_trace_is_path(t, h.uniformity());
        CHECK(t.step_count() <= longest_path(h).lmax);
        CHECK(t.consumed() + 1 <= h.vertex_count());
    }
}

TEST_CASE("lazy walk produces valid traces, deterministic per seed") {
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto t = greedy_path_lazy(40, 3, 0.3, {55, s});
        check_trace_is_path(t, 3);
        CHECK(t.consumed() + 1 <= 40);
    }
    auto a = greedy_path_lazy(60, 4, 0.2, {56, 1});
    auto b = greedy_path_lazy(60, 4, 0.2, {56, 1});
    REQUIRE(a.step_count() == b.step_count());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].edge == b.steps[i].edge);
    }
}

TEST_CASE("single-candidate boundary: n = r extends with probability p") {
    int hits = 0;
    const int trials = 4000;
    for (int t = 0; t < trials; ++t) {
        auto tr = greedy_path_lazy(3, 3, 0.5, {777, static_cast<std::uint64_t>(t)});
        REQUIRE(tr.step_count() <= 1);
        hits += tr.step_count() == 1;
        if (tr.step_count() == 1) CHECK(tr.steps[0].edge == Edge{{1, 2, 3}});
    }
    const double se = std::sqrt(0.25 / trials);
    CHECK(std::fabs(hits / static_cast<double>(trials) - 0.5) < 4 * se);
}

TEST_CASE("lazy and explicit walks agree in distribution") {
    // two-backend equivalence at (n=60, r=3, p=0.2); acceptance runs 1e4
    const int trials = 2500;
    double s1 = 0, ss1 = 0, s2 = 0, ss2 = 0;
    for (int t = 0; t < trials; ++t) {
        const auto k1 = static_cast<double>(
            greedy_path_lazy(60, 3, 0.2, {60601, static_cast<std::uint64_t>(t)})
                .step_count());
        auto h = sample_explicit(60, 3, 0.2, {60602, static_cast<std::uint64_t>(t)});
        const auto k2 = static_cast<double>(greedy_path(h).step_count());
        s1 += k1;
        ss1 += k1 * k1;
        s2 += k2;
        ss2 += k2 * k2;
    }
    const double m1 = s1 / trials, m2 = s2 / trials;
    const double se1 = std::sqrt((ss1 / trials - m1 * m1) / (trials - 1.0));
    const double se2 = std::sqrt((ss2 / trials - m2 * m2) / (trials - 1.0));
    CHECK(std::fabs(m1 - m2) < 3 * std::hypot(se1, se2));
}

TEST_CASE("trace serializes to the documented schema") {
    auto five = testutil::make_graph(5, 2, {{1, 2}, {2, 5}, {1, 3}, {3, 4}, {4, 5}});
    const auto doc = trace_json(greedy_path(five));
    CHECK(doc.at("K") == 2);
    CHECK(doc.at("terminal") == 5);
    REQUIRE(doc.at("steps").size() == 2);
    CHECK(doc.at("steps")[0].at("edge") == nlohmann::json::array({1, 2}));
    CHECK(doc.at("steps")[1].at("L") == 3);
}

TEST_CASE("extension sampler corner cases and moments") {
    Rng rng({91, 0});
    for (int i = 0; i < 50; ++i) {
        CHECK(sample_extension(3, 1.0, rng) == 2); // p=1 fires immediately
        CHECK(sample_extension(5, 1.0, rng) == 4);
    }

    // r=2 is 1 + Geometric(p) failures, mean 1/p
    {
        const int draws = 200000;
        const double p = 0.3;
        double sum = 0;
        for (int i = 0; i < draws; ++i) {
            sum += static_cast<double>(sample_extension(2, p, rng));
        }
        const double mean = sum / draws;
        const double sd = std::sqrt((1 - p) / (p * p));
        CHECK(std::fabs(mean - 1.0 / p) < 4 * sd / std::sqrt(draws));
    }

    // (r=3, p=0.5): mean within 3 sigma of the series value 2.642
    {
        const int draws = 1000000;
        double sum = 0, ss = 0;
        for (int i = 0; i < draws; ++i) {
            const double x = static_cast<double>(sample_extension(3, 0.5, rng));
            sum += x;
            ss += x * x;
        }
        const double mean = sum / draws;
        const double sd = std::sqrt(ss / draws - mean * mean);
        CHECK(std::fabs(mean - 2.642) < 3 * sd / std::sqrt(draws) + 5e-4);
    }
}

TEST_CASE("greedy accounting: steps times mean extension covers [n]") {
    // mean(K) * E[extension] tracks n for the lazy walk
    const double mean_ext = expected_extension_series(3, 0.5, 1e-10).value;
    const int trials = 100;
    const std::uint32_t n = 50000;
    double sum = 0;
    for (int t = 0; t < trials; ++t) {
        sum += static_cast<double>(
            greedy_path_lazy(n, 3, 0.5, {314, static_cast<std::uint64_t>(t)})
                .step_count());
    }
    const double mean_k = sum / trials;
    CHECK(std::fabs(mean_k * mean_ext - n) / n <= 0.02);
}
