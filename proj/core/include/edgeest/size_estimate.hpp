#ifndef EDGEEST_SIZE_ESTIMATE_HPP
#define EDGEEST_SIZE_ESTIMATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "edgeest/rng.hpp"

namespace edgeest {

// Answers whether a universe element belongs to the hidden set B.
using MembershipOracle = std::function<bool(std::uint64_t)>;

// Answers whether the queried subset misses the hidden set X entirely
// (true = empty intersection).
using EmptinessOracle = std::function<bool(const std::vector<std::uint64_t>&)>;

struct MembershipTestResult {
    bool below = false; // Y < g/2, so |B| < g w.h.p.
    double estimate = 0.0;
    std::uint64_t probes = 0;
};

struct SizeEstimate {
    double estimate = 0.0;
    bool degenerate = false; // every guess round came back Below
    std::uint64_t probes = 0;
};

// Tests a user-provided guess g for |B| over a universe of size n_universe:
// draws ceil(c_e eps^-2 (N/g) log2(1/delta)) samples with replacement and
// forms Y = (N/r) * hits. Verdict Below when Y < g/2 (then |B| < g w.p.
// >= 1-delta); otherwise Y brackets |B| within (1 +- eps) w.p. >= 1-delta.
MembershipTestResult membership_size_test(const MembershipOracle& oracle,
                                          std::uint64_t n_universe, double guess, double eps,
                                          double delta, Rng& rng, double c_e = 2.0);

// Estimates |B| with no prior guess: geometric guess loop g_i = N/2^(i+2)
// at eps = 0.5 and per-round failure delta/(8 log2 N), stopping when
// Y_i >= 4 g_i, then one refinement call at eps_a. Total
// O((N/|B|) eps_a^-2 log(1/delta)) membership probes. Requires
// delta < 1/log2(N); an all-misses run returns 0 with the degenerate flag.
SizeEstimate membership_size_estimate(const MembershipOracle& oracle, std::uint64_t n_universe,
                                      double eps_a, double delta, Rng& rng, double c_e = 2.0);

// Estimates |X| from emptiness probes alone: scans guesses g = 2, 4, ... ,
// estimating the avoidance probability alpha(g) = (1-1/g)^|X| from
// `reps_per_step` Bernoulli(1/g) samples per guess, stops at the first
// guess whose estimated alpha clears 0.3 (the 1/e crossover region), and
// inverts alpha at that guess for the final estimate. O(eps^-2 log N)
// probes; an empty X is detected by one probe of the full universe.
// reps_per_step = 0 selects the default ceil(48 / eps^2).
SizeEstimate emptiness_size_estimate(const EmptinessOracle& oracle, std::uint64_t n_universe,
                                     double eps, Rng& rng, std::uint64_t reps_per_step = 0);

} // namespace edgeest

#endif
