#include <doctest.h>

#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/size_estimate.hpp"

using namespace edgeest;

TEST_SUITE_BEGIN("size-estimate");

TEST_CASE("membership test: empty set is always Below, full set is exact") {
    const MembershipOracle nothing = [](std::uint64_t) { return false; };
    const MembershipOracle everything = [](std::uint64_t) { return true; };
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Rng rng(seed);
        const auto lo = membership_size_test(nothing, 1000, 100.0, 0.25, 0.01, rng);
        CHECK(lo.below);
        CHECK(lo.estimate == 0.0);

        const auto hi = membership_size_test(everything, 1000, 100.0, 0.25, 0.01, rng);
        CHECK_FALSE(hi.below);
        CHECK(hi.estimate == 1000.0);
    }
}

TEST_CASE("membership test brackets the hidden set size") {
    // |B| = 1000 inside N = 10000 with guess g = 1000.
    const std::uint64_t n_universe = 10000, b_size = 1000;
    const MembershipOracle oracle = [&](std::uint64_t x) { return x < b_size; };
    std::size_t good = 0;
    const std::size_t trials = 1000;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed);
        const auto r = membership_size_test(oracle, n_universe, 1000.0, 0.25, 0.01, rng);
        if (!r.below && std::abs(double(b_size) - r.estimate) <= 0.25 * r.estimate) ++good;
    }
    CHECK(good >= 990);
}

TEST_CASE("membership estimate: saturated and half-full universes") {
    const std::uint64_t n_universe = 4096;
    const MembershipOracle full = [](std::uint64_t) { return true; };
    const MembershipOracle half = [&](std::uint64_t x) { return x % 2 == 0; };
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Rng rng(seed);
        const auto sat = membership_size_estimate(full, n_universe, 0.2, 0.01, rng);
        CHECK_FALSE(sat.degenerate);
        CHECK(sat.estimate >= 0.8 * double(n_universe));
        CHECK(sat.estimate <= 1.2 * double(n_universe));

        const auto mid = membership_size_estimate(half, n_universe, 0.2, 0.01, rng);
        CHECK(std::abs(mid.estimate - 2048.0) <= 0.2 * 2048.0);
    }
}

TEST_CASE("membership estimate: singleton set lands in the zero-or-one region") {
    // |B| = 1 sits at the guess ladder's edge: the last level's stop
    // threshold equals E[Y], so runs split between the flagged degenerate
    // zero and a (1 +- eps_a) estimate of 1. Anything else is a failure.
    const std::uint64_t n_universe = 256;
    const MembershipOracle one = [](std::uint64_t x) { return x == 97; };
    std::size_t good = 0, estimated = 0;
    const std::size_t trials = 200;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed);
        const auto r = membership_size_estimate(one, n_universe, 0.25, 0.01, rng);
        if (r.degenerate) {
            good += r.estimate == 0.0;
        } else {
            ++estimated;
            good += r.estimate >= 0.75 && r.estimate <= 1.25;
        }
    }
    CHECK(good >= 196);
    CHECK(estimated >= 40); // the estimating branch is actually exercised
}

TEST_CASE("membership estimate: all-miss input returns the degenerate zero") {
    const MembershipOracle nothing = [](std::uint64_t) { return false; };
    Rng rng(5);
    const auto r = membership_size_estimate(nothing, 512, 0.25, 0.01, rng);
    CHECK(r.degenerate);
    CHECK(r.estimate == 0.0);
}

TEST_CASE("membership estimate probe count scales as eps^-2 log(1/delta)") {
    // |B| = N/2: probes <= C * eps^-2 * log2(1/delta) for a fitted C.
    const std::uint64_t n_universe = 8192;
    const MembershipOracle half = [&](std::uint64_t x) { return x % 2 == 0; };
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        for (const double eps : {0.1, 0.2, 0.4}) {
            Rng rng(seed);
            const auto r = membership_size_estimate(half, n_universe, eps, 0.01, rng);
            worst = std::max(worst, double(r.probes) * eps * eps / std::log2(1.0 / 0.01));
        }
    }
    CHECK(worst <= 160.0); // fitted once, frozen as a regression guard
}

TEST_CASE("membership estimate validates delta < 1/log2(N)") {
    const MembershipOracle full = [](std::uint64_t) { return true; };
    Rng rng(1);
    CHECK_THROWS_AS(membership_size_estimate(full, 4096, 0.2, 0.5, rng), InvalidParams);
    CHECK_THROWS_AS(membership_size_estimate(full, 4096, 1.2, 0.01, rng), InvalidParams);
}

TEST_CASE("emptiness estimate: empty set costs one probe") {
    const EmptinessOracle empty = [](const std::vector<std::uint64_t>&) { return true; };
    Rng rng(9);
    const auto r = emptiness_size_estimate(empty, 1024, 0.2, rng);
    CHECK(r.estimate == 0.0);
    CHECK(r.probes == 1);
}

TEST_CASE("emptiness estimate: full universe") {
    const std::uint64_t n_universe = 1024;
    const EmptinessOracle oracle = [](const std::vector<std::uint64_t>& q) { return q.empty(); };
    std::size_t good = 0;
    const std::size_t trials = 200;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed);
        const auto r = emptiness_size_estimate(oracle, n_universe, 0.2, rng);
        if (r.estimate >= 819.0 && r.estimate <= 1229.0) ++good;
    }
    CHECK(good >= 194);
}

TEST_CASE("emptiness estimate: sparse hidden set") {
    // |X| = 32 in N = 1024 at eps = 0.25.
    const EmptinessOracle oracle = [](const std::vector<std::uint64_t>& q) {
        for (const std::uint64_t x : q)
            if (x < 32) return false;
        return true;
    };
    std::size_t good = 0;
    const std::size_t trials = 200;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed);
        const auto r = emptiness_size_estimate(oracle, 1024, 0.25, rng);
        if (std::abs(r.estimate - 32.0) <= 0.25 * 32.0) ++good;
    }
    CHECK(good >= 190);
    Rng rng(1);
    CHECK_THROWS_AS(emptiness_size_estimate(oracle, 1024, 0.0, rng), InvalidParams);
}

TEST_SUITE_END();
