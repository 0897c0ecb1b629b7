#ifndef EDGEEST_IMPORTANCE_HPP
#define EDGEEST_IMPORTANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "edgeest/rng.hpp"

namespace edgeest {

// One term of a weighted summation: an opaque structure reference, its
// weight, and a coarse estimate of its (unknown) value. The caller's
// contract is w >= 1, e >= 1 and e/b <= value(handle) <= e*b.
struct WeightedItem {
    std::size_t handle = 0;
    double w = 1.0;
    double e = 1.0;
};

// Summation reduction by per-magnitude-bucket subsampling. Items are
// grouped by e*w into base-2 intervals [2^(j-1), 2^j) over [1, M] (top
// bucket closed when M is a power of two); buckets no larger than the
// sample size alpha pass through intact, larger buckets are sampled with
// replacement down to alpha items whose weights are multiplied by
// |bucket|/alpha. With alpha from the default formula the reduced weighted
// sum is within (1 +- eps_a) of the input's with probability >= 1 - delta.
// `bucket_cap` overrides alpha (used by the practical estimator preset to
// hit its configured output length).
std::vector<WeightedItem> importance_reduce(const std::vector<WeightedItem>& items, double eps_a,
                                            double delta, double b, double m_bound, Rng& rng,
                                            std::optional<std::uint64_t> bucket_cap = std::nullopt);

// The default per-bucket sample size: ceil(b^4/(2 eps_a^2) * (1 + ln(h/delta)))
// where h is the bucket count for m_bound.
std::uint64_t importance_bucket_size(double eps_a, double delta, double b, double m_bound);

} // namespace edgeest

#endif
