#ifndef EDGEEST_REPORT_HPP
#define EDGEEST_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "edgeest/oracle.hpp"

namespace edgeest {

// Outcome of one estimator run: the estimate, what it cost, and how it was
// produced. Serializes to
// {estimate, exact_flag, fallback_flag, rounds, queries:{bis,is}, seed, preset}.
struct EstimateReport {
    double estimate = 0.0;
    bool exact = false;             // the small-count shortcut produced an exact answer
    bool fallback = false;          // the round/iteration cap forced an exact-count finish
    bool promise_unverified = false; // terminal step's precondition not implied by history
    bool degenerate = false;        // a size estimation bottomed out at zero
    std::uint64_t rounds = 0;
    QueryLedger queries;
    std::uint64_t seed = 0;
    std::string preset;

    // Per-round BIS query counts when round stats were requested; not part
    // of the serialized contract.
    std::vector<std::uint64_t> round_bis_queries;

    std::string flags() const;   // semicolon-joined flag tokens, "" when none
    std::string to_json() const;
};

} // namespace edgeest

#endif
