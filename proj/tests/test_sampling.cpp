#include "doctest.h"

#include <cmath>
#include <map>

#include "olp/errors.hpp"
#include "olp/sampling.hpp"
#include "test_util.hpp"

using namespace olp;

TEST_CASE("p = 1 yields all tuples, p = 0 yields none") {
    auto full = sample_explicit(3, 3, 1.0, {1, 0});
    REQUIRE(full.edge_count() == 1);
    CHECK(full.edge_copy(0) == Edge{{1, 2, 3}});

    auto empty = sample_explicit(10, 2, 0.0, {1, 0});
    CHECK(empty.edge_count() == 0);

    auto complete = sample_explicit(5, 2, 1.0, {1, 0});
    CHECK(complete.edge_count() == 10);
}

TEST_CASE("sampling is bit-for-bit reproducible per seed") {
    auto a = sample_explicit(20, 3, 0.5, {77, 3});
    auto b = sample_explicit(20, 3, 0.5, {77, 3});
    CHECK(a.edge_list() == b.edge_list());
    CHECK(a.edge_count() <= 1140);
    auto c = sample_explicit(20, 3, 0.5, {77, 4});
    CHECK(a.edge_list() != c.edge_list());
}

TEST_CASE("sampled hypergraphs validate") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto h = testutil::random_small(15, 3, 0.4, s);
        CHECK(validate(h).ok);
    }
}

TEST_CASE("edge count mean tracks C(n,r) p over seeds") {
    const double expect = 1140 * 0.3; // C(20,3) p
    const int seeds = 300;
    double sum = 0, ss = 0;
    for (int s = 0; s < seeds; ++s) {
        auto h = sample_explicit(20, 3, 0.3, {500, static_cast<std::uint64_t>(s)});
        const double m = static_cast<double>(h.edge_count());
        sum += m;
        ss += m * m;
    }
    const double mean = sum / seeds;
    const double sd = std::sqrt((ss / seeds - mean * mean) * seeds / (seeds - 1.0));
    const double se = sd / std::sqrt(static_cast<double>(seeds));
    CHECK(std::fabs(mean - expect) < 3 * se);
}

TEST_CASE("per-pair inclusion frequency is Bernoulli(p) across seeds") {
    // n=12, r=2, p=0.5 over 1000 seeds; every specific pair within 5 sigma
    const int seeds = 1000;
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> freq;
    for (int s = 0; s < seeds; ++s) {
        auto h = sample_explicit(12, 2, 0.5, {31337, static_cast<std::uint64_t>(s)});
        for (std::size_t id = 0; id < h.edge_count(); ++id) {
            ++freq[{h.first(id), h.last(id)}];
        }
    }
    const double sigma = std::sqrt(0.25 / seeds);
    for (std::uint32_t a = 1; a <= 12; ++a) {
        for (std::uint32_t b = a + 1; b <= 12; ++b) {
            const double f = freq[{a, b}] / static_cast<double>(seeds);
            CHECK(std::fabs(f - 0.5) < 5 * sigma);
        }
    }
}

TEST_CASE("enumeration and rejection strategies agree in distribution") {
    SampleOptions enumerate;
    enumerate.strategy = SampleOptions::Strategy::enumerate_all;
    SampleOptions reject;
    reject.strategy = SampleOptions::Strategy::reject;

    const int seeds = 400;
    const double expect = 1140 * 0.2;
    double mean_e = 0, mean_r = 0, ss_e = 0, ss_r = 0;
    for (int s = 0; s < seeds; ++s) {
        const RngSeed seed{901, static_cast<std::uint64_t>(s)};
        const double me = static_cast<double>(
            sample_explicit(20, 3, 0.2, seed, enumerate).edge_count());
        const double mr = static_cast<double>(
            sample_explicit(20, 3, 0.2, {902, static_cast<std::uint64_t>(s)}, reject)
                .edge_count());
        mean_e += me;
        mean_r += mr;
        ss_e += me * me;
        ss_r += mr * mr;
    }
    mean_e /= seeds;
    mean_r /= seeds;
    const double se_e = std::sqrt((ss_e / seeds - mean_e * mean_e) / (seeds - 1.0));
    const double se_r = std::sqrt((ss_r / seeds - mean_r * mean_r) / (seeds - 1.0));
    CHECK(std::fabs(mean_e - expect) < 4 * se_e);
    CHECK(std::fabs(mean_r - expect) < 4 * se_r);
    CHECK(std::fabs(mean_e - mean_r) < 4 * std::hypot(se_e, se_r));
}

TEST_CASE("budget gate raises before any allocation") {
    SampleOptions opts;
    opts.max_expected_edges = 100;
    CHECK_THROWS_AS(sample_explicit(1000, 2, 0.5, {1, 0}, opts), budget_exceeded);
    // p=0 under a huge vertex count is still fine
    auto h = sample_explicit(2000000, 3, 0.0, {1, 0}, opts);
    CHECK(h.edge_count() == 0);
}

TEST_CASE("unit mask corner cases and Bernoulli fraction") {
    auto all = sample_unit_mask(5, 3, 1.0, {1, 0});
    REQUIRE(all.positions() == 3);
    CHECK(all.present == std::vector<std::uint8_t>{1, 1, 1});

    auto none = sample_unit_mask(5, 3, 0.0, {1, 0});
    CHECK(none.present == std::vector<std::uint8_t>{0, 0, 0});

    auto big = sample_unit_mask(1000000, 3, 0.3, {5, 0});
    std::uint64_t ones = 0;
    for (auto b : big.present) ones += b;
    const double frac = static_cast<double>(ones) / big.positions();
    CHECK(std::fabs(frac - 0.3) < 0.002); // binomial 3 sigma is ~0.0014
}
