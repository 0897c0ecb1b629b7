#ifndef EDGEEST_BIS_ESTIMATOR_HPP
#define EDGEEST_BIS_ESTIMATOR_HPP

#include <cstdint>

#include "edgeest/exact_count.hpp"
#include "edgeest/report.hpp"
#include "edgeest/size_estimate.hpp"

namespace edgeest {

enum class Preset { practical, theory };

inline const char* preset_name(Preset p) {
    return p == Preset::practical ? "practical" : "theory";
}

// One entry of the estimator's working list: a disjoint bipartite pair and
// the weight its edge count carries in the running estimate.
struct WeightedPair {
    VertexSet s;
    VertexSet v;
    double w = 1.0;
};

// Accumulator plus active list; acc + sum_i w_i * m(S_i,V_i) is the tracked
// quantity (checkable against ground truth in tests).
struct EstimatorState {
    double acc = 0.0;
    std::vector<WeightedPair> triples;
};

// Tuning knobs for the BIS estimator. The practical preset keeps thresholds
// at desk scale; the theory preset uses the conservative asymptotic
// formulas and is only exercised on small instances.
struct BisParams {
    double eps = 0.2;
    std::uint64_t l_small = 8;          // cleanup threshold (cleanup counts up to 2*l_small)
    std::uint64_t l_len = 16;           // reduction target length (reduce fires above 2*l_len)
    std::size_t k_refine = 4;           // colors per side in the refine step
    std::uint64_t coarse_trials = 16;   // CheckEstimate trials per scan level
    std::uint64_t max_rounds = 8;
    std::uint64_t step_a_threshold = 16; // edge cap for the exact-count shortcut
    Preset preset = Preset::practical;
    bool collect_round_stats = false;

    static BisParams make(double eps, std::size_t n, Preset preset = Preset::practical);
    void validate() const;
};

enum class CheckVerdict { accept, reject };

// The guess test: for i = 0..floor(log2 n), samples S' (each vertex w.p.
// min(2^i/guess, 1)) and V' (each w.p. 2^-i) and accepts on the first
// round where an edge crosses (S',V'). At most 1 + floor(log2 n) BIS
// queries; never accepts when m(S,V) = 0. Requires guess >= 1.
CheckVerdict check_estimate(OracleSession& session, const VertexSet& s, const VertexSet& v,
                            double guess, Rng& rng);

struct CoarseResult {
    double estimate = 0.0;   // zero or a power of two, at most n^2
    bool fell_through = false; // scan ended with no accepting level while m > 0
};

// Coarse edge-count estimate: answers 0 exactly when m(S,V) = 0 (one
// query), otherwise scans guesses 2^j downward and returns the first level
// where at least 3/8 of the CheckEstimate trials accept. W.h.p. the output
// is within a factor 8 log2 n of m(S,V); the no-acceptance fall-through
// returns 1 with a flag. O(log^3 n) BIS queries.
CoarseResult coarse_estimate(OracleSession& session, const VertexSet& s, const VertexSet& v,
                             const BisParams& params, Rng& rng);

// The full BIS edge estimator: exact-count shortcut, then random
// 2-coloring into a single weighted pair, then rounds of cleanup (exact
// counting of sparse pairs), refine (matched-pair sparsification with
// weight scaling), and reduce (coarse estimates + importance subsampling)
// until the active list drains. (1 +- eps) w.h.p.; if the round cap is hit
// the residue is exact-counted and the report is flagged as fallback.
EstimateReport bis_estimate_edges(OracleSession& session, const BisParams& params, Rng& rng);

// (1 +- eps)-approximation of deg(v) using O(eps^-2 log n) BIS queries:
// the neighborhood-emptiness adapter makes the BIS oracle an emptiness
// oracle for N(v).
SizeEstimate bis_estimate_degree(OracleSession& session, Vertex v, double eps, Rng& rng);

} // namespace edgeest

#endif
