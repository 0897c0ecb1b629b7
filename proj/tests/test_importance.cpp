#include <doctest.h>

#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/importance.hpp"

using namespace edgeest;

namespace {

double weighted_sum(const std::vector<WeightedItem>& items, const std::vector<double>& values) {
    double total = 0.0;
    for (const WeightedItem& item : items) total += item.w * values[item.handle];
    return total;
}

} // namespace

TEST_SUITE_BEGIN("importance");

TEST_CASE("buckets at or below the sample size pass through intact") {
    std::vector<WeightedItem> items;
    std::vector<double> values;
    for (std::size_t i = 0; i < 40; ++i) {
        items.push_back({i, 1.0 + double(i % 3), 1.0 + double(i % 5)});
        values.push_back(1.0 + double(i % 4));
    }
    Rng rng(5);
    // Default alpha for these parameters is far above 40, so nothing samples.
    const auto out = importance_reduce(items, 0.25, 0.01, 2.0, 1 << 10, rng);
    REQUIRE(out.size() == items.size());
    CHECK(weighted_sum(out, values) == doctest::Approx(weighted_sum(items, values)));
    for (const WeightedItem& item : out) CHECK(item.w == items[item.handle].w);
}

TEST_CASE("a single item passes through unchanged") {
    Rng rng(3);
    const auto out = importance_reduce({{0, 7.0, 3.0}}, 0.5, 0.1, 4.0, 100.0, rng);
    REQUIRE(out.size() == 1);
    CHECK(out[0].w == 7.0);
    CHECK(out[0].e == 3.0);
}

TEST_CASE("identical items reduce to the exact total") {
    // 10^4 unit items; survivors carry weight |U|/alpha, so the reduced sum
    // is exactly 10^4 regardless of which items survive.
    std::vector<WeightedItem> items(10000);
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = {i, 1.0, 1.0};
    const std::vector<double> values(items.size(), 1.0);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Rng rng(seed);
        const auto out = importance_reduce(items, 0.25, 0.05, 1.0, 16.0, rng, 64);
        CHECK(out.size() == 64);
        CHECK(weighted_sum(out, values) == doctest::Approx(10000.0));
    }
}

TEST_CASE("survivor weights are scaled by bucket size over sample size") {
    std::vector<WeightedItem> items(100);
    for (std::size_t i = 0; i < items.size(); ++i) items[i] = {i, 2.0, 1.5}; // e*w = 3
    Rng rng(11);
    const auto out = importance_reduce(items, 0.25, 0.05, 2.0, 64.0, rng, 10);
    REQUIRE(out.size() == 10);
    for (const WeightedItem& item : out) CHECK(item.w == doctest::Approx(2.0 * 100.0 / 10.0));
}

TEST_CASE("mixed-magnitude input: bracket failure rate stays within 2*delta") {
    // One heavy bucket that gets sampled plus light pass-through buckets,
    // with true values spread across the coarse bracket [e/b, e*b].
    const double b = 2.0, eps_a = 0.25, delta = 0.05, m_bound = 1 << 14;
    std::vector<WeightedItem> items;
    std::vector<double> values;
    for (std::size_t i = 0; i < 5000; ++i) { // heavy bucket: e*w = 8
        items.push_back({values.size(), 1.0, 8.0});
        values.push_back(i % 2 == 0 ? 8.0 / b : 8.0 * b);
    }
    for (std::size_t i = 0; i < 30; ++i) { // light buckets
        items.push_back({values.size(), 1.0, 1024.0});
        values.push_back(1024.0 * (i % 2 == 0 ? 0.75 : 1.25));
    }
    const double truth = weighted_sum(items, values);

    std::size_t failures = 0;
    const std::size_t trials = 400;
    for (std::uint64_t seed = 0; seed < trials; ++seed) {
        Rng rng(seed);
        const auto out = importance_reduce(items, eps_a, delta, b, m_bound, rng);
        const double got = weighted_sum(out, values);
        if (std::abs(got - truth) > eps_a * truth) ++failures;
    }
    CHECK(double(failures) <= 2.0 * delta * double(trials));
}

TEST_CASE("parameter validation") {
    Rng rng(1);
    CHECK_THROWS_AS(importance_reduce({{0, 1.0, 1.0}}, 0.0, 0.1, 1.0, 4.0, rng), InvalidParams);
    CHECK_THROWS_AS(importance_reduce({{0, 1.0, 1.0}}, 0.2, 1.5, 1.0, 4.0, rng), InvalidParams);
    CHECK_THROWS_AS(importance_reduce({{0, 1.0, 1.0}}, 0.2, 0.1, 0.5, 4.0, rng), InvalidParams);
    CHECK_THROWS_AS(importance_reduce({{0, 0.5, 1.0}}, 0.2, 0.1, 1.0, 4.0, rng), InvalidParams);
    CHECK_THROWS_AS(importance_reduce({{0, 1.0, 0.9}}, 0.2, 0.1, 1.0, 4.0, rng), InvalidParams);
}

TEST_CASE("default sample size follows the b^4/eps^2 shape") {
    const std::uint64_t small = importance_bucket_size(0.5, 0.1, 1.0, 16.0);
    const std::uint64_t big = importance_bucket_size(0.5, 0.1, 2.0, 16.0);
    CHECK(big >= 15 * small); // b^4 of 2 vs 1
}

TEST_SUITE_END();
