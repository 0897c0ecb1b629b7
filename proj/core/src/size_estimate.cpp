#include "edgeest/size_estimate.hpp"

#include <algorithm>
#include <cmath>

#include "edgeest/errors.hpp"
#include "edgeest/exact_count.hpp"

namespace edgeest {

namespace {

double log2_of(double x) { return std::log2(x); }

} // namespace

MembershipTestResult membership_size_test(const MembershipOracle& oracle,
                                          std::uint64_t n_universe, double guess, double eps,
                                          double delta, Rng& rng, double c_e) {
    if (guess <= 0.0) throw InvalidParams("membership_size_test: guess must be > 0");
    if (!(eps > 0.0 && eps < 1.0) || !(delta > 0.0 && delta < 1.0))
        throw InvalidParams("membership_size_test: eps, delta must be in (0,1)");
    if (c_e <= 0.0) throw InvalidParams("membership_size_test: c_e must be > 0");

    MembershipTestResult result;
    if (n_universe == 0) {
        result.below = true;
        return result;
    }

    const double r_real =
        std::ceil(c_e / (eps * eps) * (double(n_universe) / guess) * log2_of(1.0 / delta));
    const auto r = std::uint64_t(std::max(1.0, std::min(r_real, 1e12)));

    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < r; ++i)
        if (oracle(rng.below(n_universe))) ++hits;

    result.probes = r;
    result.estimate = double(n_universe) * double(hits) / double(r);
    result.below = result.estimate < guess / 2.0;
    return result;
}

SizeEstimate membership_size_estimate(const MembershipOracle& oracle, std::uint64_t n_universe,
                                      double eps_a, double delta, Rng& rng, double c_e) {
    if (!(eps_a > 0.0 && eps_a < 1.0)) throw InvalidParams("membership_size_estimate: eps_a in (0,1)");
    const double log_n = std::max(1.0, log2_of(double(std::max<std::uint64_t>(n_universe, 2))));
    if (!(delta > 0.0) || delta >= 1.0 / log_n)
        throw InvalidParams("membership_size_estimate: requires delta < 1/log2(N)");

    SizeEstimate out;
    if (n_universe == 0) {
        out.degenerate = true;
        return out;
    }

    const double round_delta = delta / (8.0 * log_n);
    const auto rounds = std::uint64_t(std::ceil(log_n));
    for (std::uint64_t i = 1; i <= rounds; ++i) {
        const double guess = double(n_universe) / std::exp2(double(i + 2));
        if (guess < 0.25) break;
        const MembershipTestResult step =
            membership_size_test(oracle, n_universe, guess, 0.5, round_delta, rng, c_e);
        out.probes += step.probes;
        if (step.estimate >= 4.0 * guess) {
            const MembershipTestResult fine =
                membership_size_test(oracle, n_universe, guess, eps_a, round_delta, rng, c_e);
            out.probes += fine.probes;
            out.estimate = fine.estimate;
            return out;
        }
    }
    out.degenerate = true;
    return out;
}

SizeEstimate emptiness_size_estimate(const EmptinessOracle& oracle, std::uint64_t n_universe,
                                     double eps, Rng& rng, std::uint64_t reps_per_step) {
    if (!(eps > 0.0 && eps < 1.0)) throw InvalidParams("emptiness_size_estimate: eps in (0,1)");
    SizeEstimate out;
    if (n_universe == 0) return out;

    const std::uint64_t reps =
        reps_per_step > 0 ? reps_per_step : std::uint64_t(std::ceil(48.0 / (eps * eps)));

    // One probe of the whole universe settles X = empty exactly.
    {
        std::vector<std::uint64_t> all(n_universe);
        for (std::uint64_t i = 0; i < n_universe; ++i) all[i] = i;
        ++out.probes;
        if (oracle(all)) return out;
    }

    auto estimate_alpha = [&](double g) {
        const double p = 1.0 / g;
        std::uint64_t empties = 0;
        std::vector<std::uint64_t> sample;
        for (std::uint64_t rep = 0; rep < reps; ++rep) {
            sample.clear();
            std::uint64_t idx = rng.geometric_skip(p);
            while (idx < n_universe) {
                sample.push_back(idx);
                idx += 1 + rng.geometric_skip(p);
            }
            ++out.probes;
            if (oracle(sample)) ++empties;
        }
        return double(empties) / double(reps);
    };

    // alpha(g) rises monotonically from ~0 to ~1 around g = |X|; stop at the
    // first doubling level past the 1/e crossover.
    const std::uint32_t top = std::max<std::uint32_t>(1, log2_ceil(n_universe));
    double g_pick = std::exp2(double(top));
    double alpha = 1.0;
    for (std::uint32_t j = 1; j <= top; ++j) {
        const double g = std::exp2(double(j));
        const double a = estimate_alpha(g);
        if (a >= 0.3) {
            g_pick = g;
            alpha = a;
            break;
        }
        if (j == top) alpha = a;
    }

    const double lo = 1.0 / double(2 * reps);
    alpha = std::clamp(alpha, lo, 1.0 - lo);
    out.estimate = std::log(alpha) / std::log(1.0 - 1.0 / g_pick);
    return out;
}

} // namespace edgeest
