#include "edgeest/sparsify.hpp"

#include "edgeest/errors.hpp"

namespace edgeest {

namespace {

std::vector<std::uint8_t> draw_colors(std::size_t count, std::size_t k, Rng& rng) {
    std::vector<std::uint8_t> colors(count);
    for (auto& c : colors) c = std::uint8_t(rng.below(k));
    return colors;
}

} // namespace

SparsifyResult sparsify_from_colors(const VertexSet& universe, std::size_t k,
                                    const std::vector<std::uint8_t>& colors) {
    if (k < 1) throw InvalidPartCount("sparsify: k must be >= 1");
    const Partition parts = partition_from_colors(universe, 2 * k, colors);
    SparsifyResult out;
    out.scale = 2 * k;
    out.pairs.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.pairs.emplace_back(parts.parts[i], parts.parts[k + i]);
    return out;
}

SparsifyResult sparsify_from_colors(const VertexSet& s, const VertexSet& v, std::size_t k,
                                    const std::vector<std::uint8_t>& colors_s,
                                    const std::vector<std::uint8_t>& colors_v) {
    if (k < 2) throw InvalidPartCount("sparsify (pair form): k must be >= 2");
    if (s.intersects(v)) throw SetsNotDisjoint("sparsify: S and V overlap");
    const Partition ps = partition_from_colors(s, k, colors_s);
    const Partition pv = partition_from_colors(v, k, colors_v);
    SparsifyResult out;
    out.scale = k;
    out.pairs.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.pairs.emplace_back(ps.parts[i], pv.parts[i]);
    return out;
}

SparsifyResult sparsify_matched_pairs(const VertexSet& universe, std::size_t k, Rng& rng) {
    if (k < 1 || 2 * k > std::max<std::size_t>(universe.universe_size(), 2))
        throw InvalidPartCount("sparsify: need 1 <= k <= floor(n/2)");
    return sparsify_from_colors(universe, k, draw_colors(universe.size(), 2 * k, rng));
}

SparsifyResult sparsify_matched_pairs(const VertexSet& s, const VertexSet& v, std::size_t k,
                                      Rng& rng) {
    if (k < 2 || k > std::max(s.size(), v.size()))
        throw InvalidPartCount("sparsify (pair form): need 2 <= k <= max(|S|,|V|)");
    return sparsify_from_colors(s, v, k, draw_colors(s.size(), k, rng),
                                draw_colors(v.size(), k, rng));
}

} // namespace edgeest
