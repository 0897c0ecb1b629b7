#ifndef EDGEEST_IS_ESTIMATOR_HPP
#define EDGEEST_IS_ESTIMATOR_HPP

#include <cstdint>

#include "edgeest/bis_estimator.hpp" // Preset
#include "edgeest/exact_count.hpp"
#include "edgeest/report.hpp"

namespace edgeest {

// Tuning knobs for the IS estimator. l_base is the exact-count shortcut
// threshold; varsigma scales the color count k = ceil(t*eps/(varsigma*log n))
// used by the growing search.
struct IsParams {
    double eps = 0.25;
    double c_a = 1.0;
    double varsigma = 0.125;
    std::uint64_t l_base = 16;
    Preset preset = Preset::practical;

    static IsParams make(double eps, std::size_t n, Preset preset = Preset::practical);
    void validate() const;
};

struct SmallCountResult {
    bool exact = false; // false certifies m(S) > l_base
    std::uint64_t count = 0;
};

// Decides m(S) <= l_base by budgeted exact counting, returning the exact
// value on the yes side. O(l_base log n) IS queries.
SmallCountResult is_small_count(OracleSession& session, const VertexSet& s,
                                const IsParams& params);

enum class GrowKind { estimate, more_than };

struct GrowResult {
    GrowKind kind = GrowKind::more_than;
    double value = 0.0;  // the estimate, or the certified lower bound 2t^2
    std::size_t colors = 1;
};

// Growing search step at scale t: colors S with k classes, exactly counts
// the within-class edge total, aborting to MoreThan(2t^2) once the running
// sum exceeds M = 8t^2/k; otherwise returns k * sum as the estimate. Under
// the promise m(S) >= max(l_base, t^2) the estimate is within (1 +- eps)
// w.h.p. k = 1 degrades to an exact count.
GrowResult is_growing_step(OracleSession& session, const VertexSet& s, double t,
                           const IsParams& params, Rng& rng);

enum class ShrinkKind { estimate, at_most };

struct ShrinkResult {
    ShrinkKind kind = ShrinkKind::at_most;
    double value = 0.0; // the estimate, or the certified upper bound |S|^2/(2t)
};

// Shrinking search step at scale t: treats IS queries on vertex pairs as a
// membership oracle over the C(|S|,2) pair universe (colex unranking) and
// tests the guess g = |S|^2/(16t) at eps = 1/2; Below certifies
// m(S) <= |S|^2/(2t), otherwise a second test at eps_a yields the estimate.
ShrinkResult is_shrinking_step(OracleSession& session, const VertexSet& s, double t, double eps_a,
                               const IsParams& params, Rng& rng);

// The full IS edge estimator: exact-count shortcut at l_base, then scale
// doubling from t = sqrt(l_base) with a growing step and a shrinking step
// per iteration, returning the first estimate either step produces. If t
// outgrows n the residue is exact-counted and flagged as fallback.
EstimateReport is_estimate_edges(OracleSession& session, const IsParams& params, Rng& rng);

} // namespace edgeest

#endif
