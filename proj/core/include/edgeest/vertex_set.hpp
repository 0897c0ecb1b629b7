#ifndef EDGEEST_VERTEX_SET_HPP
#define EDGEEST_VERTEX_SET_HPP

#include <cassert>
#include <cstdint>
#include <vector>

#include "edgeest/rng.hpp"

namespace edgeest {

using Vertex = std::uint32_t;

// Fixed-capacity bit-set over the vertex universe {0..n-1}. Cardinality is
// maintained eagerly so size() is O(1); set algebra is O(n/64).
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(Vertex(v));
        return s;
    }

    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> vs) {
        VertexSet s(universe);
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    std::size_t universe_size() const { return universe_; }
    std::size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }
    const std::vector<std::uint64_t>& words() const { return words_; }

    bool contains(Vertex v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }

    void insert(Vertex v) {
        assert(v < universe_);
        std::uint64_t& w = words_[v >> 6];
        const std::uint64_t bit = std::uint64_t(1) << (v & 63);
        if (!(w & bit)) {
            w |= bit;
            ++size_;
        }
    }

    void erase(Vertex v) {
        std::uint64_t& w = words_[v >> 6];
        const std::uint64_t bit = std::uint64_t(1) << (v & 63);
        if (w & bit) {
            w &= ~bit;
            --size_;
        }
    }

    void clear() {
        for (auto& w : words_) w = 0;
        size_ = 0;
    }

    bool intersects(const VertexSet& other) const {
        assert(words_.size() == other.words_.size());
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool disjoint_with(const VertexSet& other) const { return !intersects(other); }

    std::size_t intersection_count(const VertexSet& other) const {
        assert(words_.size() == other.words_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::size_t(__builtin_popcountll(words_[i] & other.words_[i]));
        return c;
    }

    VertexSet& unite_with(const VertexSet& other) {
        assert(words_.size() == other.words_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] |= other.words_[i];
            c += std::size_t(__builtin_popcountll(words_[i]));
        }
        size_ = c;
        return *this;
    }

    VertexSet& intersect_with(const VertexSet& other) {
        assert(words_.size() == other.words_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= other.words_[i];
            c += std::size_t(__builtin_popcountll(words_[i]));
        }
        size_ = c;
        return *this;
    }

    VertexSet& subtract(const VertexSet& other) {
        assert(words_.size() == other.words_.size());
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            words_[i] &= ~other.words_[i];
            c += std::size_t(__builtin_popcountll(words_[i]));
        }
        size_ = c;
        return *this;
    }

    friend VertexSet set_union(VertexSet a, const VertexSet& b) { return a.unite_with(b); }
    friend VertexSet set_intersection(VertexSet a, const VertexSet& b) { return a.intersect_with(b); }
    friend VertexSet set_difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && words_ == other.words_;
    }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    // Smallest member, or universe_size() when empty.
    Vertex first() const { return next(0); }

    // Smallest member >= from, or universe_size() when none.
    Vertex next(Vertex from) const {
        if (from >= universe_) return Vertex(universe_);
        std::size_t wi = from >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t(0) << (from & 63));
        for (;;) {
            if (w) return Vertex((wi << 6) + std::size_t(__builtin_ctzll(w)));
            if (++wi == words_.size()) return Vertex(universe_);
            w = words_[wi];
        }
    }

    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(size_);
        for (Vertex v = first(); v < universe_; v = next(v + 1)) out.push_back(v);
        return out;
    }

    // Member with the given rank (0-based, ascending). rank < size().
    Vertex nth_member(std::size_t rank) const {
        assert(rank < size_);
        for (std::size_t wi = 0;; ++wi) {
            const auto c = std::size_t(__builtin_popcountll(words_[wi]));
            if (rank < c) {
                std::uint64_t w = words_[wi];
                while (rank > 0) {
                    w &= w - 1;
                    --rank;
                }
                return Vertex((wi << 6) + std::size_t(__builtin_ctzll(w)));
            }
            rank -= c;
        }
    }

    // First ceil(size/2) members by ascending id; `rest` gets the remainder.
    VertexSet split_first_half(VertexSet& rest) const {
        VertexSet head(universe_);
        rest = VertexSet(universe_);
        const std::size_t take = (size_ + 1) / 2;
        std::size_t i = 0;
        for (Vertex v = first(); v < universe_; v = next(v + 1), ++i)
            (i < take ? head : rest).insert(v);
        return head;
    }

    // Independent Bernoulli(p) subset. Sparse p uses geometric rank skips
    // over a single word-cursor pass (O(words + hits)); dense p draws one
    // coin per member.
    VertexSet bernoulli_subset(double p, Rng& rng) const {
        VertexSet out(universe_);
        if (p <= 0.0 || size_ == 0) return out;
        if (p >= 1.0) return *this;
        if (p >= 0.125) {
            for (Vertex v = first(); v < universe_; v = next(v + 1))
                if (rng.bernoulli(p)) out.insert(v);
            return out;
        }
        std::uint64_t target = rng.geometric_skip(p);
        if (target >= size_) return out;
        std::uint64_t passed = 0;
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            const std::uint64_t w = words_[wi];
            const auto c = std::uint64_t(__builtin_popcountll(w));
            while (target < passed + c) {
                std::uint64_t t = w;
                for (std::uint64_t k = target - passed; k > 0; --k) t &= t - 1;
                out.insert(Vertex((wi << 6) + std::size_t(__builtin_ctzll(t))));
                target += 1 + rng.geometric_skip(p);
                if (target >= size_) return out;
            }
            passed += c;
        }
        return out;
    }

private:
    std::size_t universe_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Ordered list of pairwise-disjoint parts covering the partitioned set.
// Empty parts are allowed.
struct Partition {
    std::vector<VertexSet> parts;
};

} // namespace edgeest

#endif
