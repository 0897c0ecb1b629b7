#ifndef EDGEEST_SPARSIFY_HPP
#define EDGEEST_SPARSIFY_HPP

#include <cstdint>
#include <vector>

#include "edgeest/graph.hpp"

namespace edgeest {

// Matched color-class pairs produced by random sparsification. `scale` is
// the unbiasing factor: 2k when one universe was split into 2k classes and
// the pairs are (S_i, S_{k+i}); k when S and V were split independently
// into k classes each and the pairs are (S_i, V_i).
struct SparsifyResult {
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    std::uint64_t scale = 1;
};

// Splits one vertex set into 2k random classes and matches them
// (S_i, S_{k+i}). Requires 1 <= k <= floor(universe/2).
SparsifyResult sparsify_matched_pairs(const VertexSet& universe, std::size_t k, Rng& rng);

// Splits disjoint S and V independently into k random classes each and
// matches (S_i, V_i). Requires 2 <= k <= max(|S|,|V|).
SparsifyResult sparsify_matched_pairs(const VertexSet& s, const VertexSet& v, std::size_t k,
                                      Rng& rng);

// Deterministic cores of the two variants with the color draws supplied
// explicitly (one color per member in ascending id order); exhaustive
// enumeration tests are built on these.
SparsifyResult sparsify_from_colors(const VertexSet& universe, std::size_t k,
                                    const std::vector<std::uint8_t>& colors);
SparsifyResult sparsify_from_colors(const VertexSet& s, const VertexSet& v, std::size_t k,
                                    const std::vector<std::uint8_t>& colors_s,
                                    const std::vector<std::uint8_t>& colors_v);

} // namespace edgeest

#endif
