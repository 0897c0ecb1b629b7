#include "edgeest/importance.hpp"

#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/exact_count.hpp"

namespace edgeest {

namespace {

std::uint32_t bucket_count(double m_bound) {
    return std::max<std::uint32_t>(1, log2_ceil(std::uint64_t(std::ceil(m_bound))));
}

} // namespace

std::uint64_t importance_bucket_size(double eps_a, double delta, double b, double m_bound) {
    const double h = bucket_count(m_bound);
    const double alpha = std::pow(b, 4) / (2.0 * eps_a * eps_a) * (1.0 + std::log(h / delta));
    if (alpha >= 9e18) return ~std::uint64_t(0);
    return std::uint64_t(std::ceil(alpha));
}

std::vector<WeightedItem> importance_reduce(const std::vector<WeightedItem>& items, double eps_a,
                                            double delta, double b, double m_bound, Rng& rng,
                                            std::optional<std::uint64_t> bucket_cap) {
    if (!(eps_a > 0.0 && eps_a < 1.0)) throw InvalidParams("importance_reduce: eps_a in (0,1)");
    if (!(delta > 0.0 && delta < 1.0)) throw InvalidParams("importance_reduce: delta in (0,1)");
    if (b < 1.0 || m_bound < 1.0) throw InvalidParams("importance_reduce: b, M must be >= 1");
    for (const auto& item : items)
        if (item.w < 1.0 || item.e < 1.0)
            throw InvalidParams("importance_reduce: every w and e must be >= 1");

    const std::uint32_t h = bucket_count(m_bound);
    const std::uint64_t alpha =
        bucket_cap ? std::max<std::uint64_t>(1, *bucket_cap)
                   : importance_bucket_size(eps_a, delta, b, m_bound);

    // Bucket j (1-based) holds items with e*w in [2^(j-1), 2^j); the top
    // bucket is closed, which also absorbs any overshoot past M from coarse
    // overestimates.
    std::vector<std::vector<std::size_t>> buckets(h);
    for (std::size_t i = 0; i < items.size(); ++i) {
        const double key = items[i].e * items[i].w;
        std::uint32_t j = std::uint32_t(std::ilogb(key)) + 1; // key >= 1
        if (j > h) j = h;
        buckets[j - 1].push_back(i);
    }

    std::vector<WeightedItem> out;
    out.reserve(items.size());
    for (const auto& bucket : buckets) {
        if (bucket.empty()) continue;
        if (bucket.size() <= alpha) {
            for (std::size_t i : bucket) out.push_back(items[i]);
        } else {
            const double scale = double(bucket.size()) / double(alpha);
            for (std::uint64_t t = 0; t < alpha; ++t) {
                WeightedItem picked = items[bucket[std::size_t(rng.below(bucket.size()))]];
                picked.w *= scale;
                out.push_back(picked);
            }
        }
    }
    return out;
}

} // namespace edgeest
