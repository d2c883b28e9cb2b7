#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "posetprob/poset.hpp"
#include "posetprob/tableaux.hpp"

namespace posetprob {

namespace detail {

// Poset on up to 8 elements, closure kept as per-vertex above-masks.
struct SmallPoset {
    int n = 0;
    std::array<uint8_t, 8> above{};

    std::array<uint8_t, 8> below_masks() const {
        std::array<uint8_t, 8> below{};
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (above[i] >> j & 1) below[j] |= uint8_t(1) << i;
        return below;
    }

    uint64_t key() const {
        uint64_t k = 0;
        for (int i = 0; i < n; ++i) k |= uint64_t(above[i]) << (8 * i);
        return k;
    }
};

// Canonical key: minimum closure encoding over relabelings that respect a
// label-independent vertex invariant. The invariant partitions vertices into
// classes; only within-class permutations can realize an isomorphism.
inline uint64_t canonical_key(const SmallPoset& p) {
    auto below = p.below_masks();
    std::array<uint32_t, 8> inv0{};
    for (int v = 0; v < p.n; ++v)
        inv0[v] = uint32_t(std::popcount(uint32_t(below[v]))) << 4 |
                  uint32_t(std::popcount(uint32_t(p.above[v])));
    // one refinement round: fold in the sorted invariants of the up/down sets
    std::array<uint64_t, 8> inv{};
    for (int v = 0; v < p.n; ++v) {
        std::vector<uint32_t> ups, downs;
        for (int w = 0; w < p.n; ++w) {
            if (p.above[v] >> w & 1) ups.push_back(inv0[w]);
            if (below[v] >> w & 1) downs.push_back(inv0[w]);
        }
        std::sort(ups.begin(), ups.end());
        std::sort(downs.begin(), downs.end());
        uint64_t h = inv0[v];
        for (uint32_t x : ups) h = h * 0x9e3779b1u + x + 1;
        for (uint32_t x : downs) h = h * 0x85ebca6bu + x + 2;
        inv[v] = h;
    }

    std::vector<int> verts(p.n);
    for (int v = 0; v < p.n; ++v) verts[v] = v;
    std::sort(verts.begin(), verts.end(), [&](int x, int y) {
        return inv[x] != inv[y] ? inv[x] < inv[y] : x < y;
    });
    // class block boundaries
    std::vector<std::pair<int, int>> blocks;
    for (int i = 0; i < p.n;) {
        int j = i;
        while (j < p.n && inv[verts[j]] == inv[verts[i]]) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }

    uint64_t best = ~uint64_t(0);
    std::array<int, 8> pos{};  // pos[original vertex] = new index
    auto consider = [&]() {
        for (int i = 0; i < p.n; ++i) pos[verts[i]] = i;
        uint64_t k = 0;
        for (int v = 0; v < p.n; ++v) {
            uint8_t row = 0;
            for (int w = 0; w < p.n; ++w)
                if (p.above[v] >> w & 1) row |= uint8_t(1) << pos[w];
            k |= uint64_t(row) << (8 * pos[v]);
        }
        if (k < best) best = k;
    };
    // odometer over per-block permutations
    auto rec = [&](auto&& self, size_t bi) -> void {
        if (bi == blocks.size()) {
            consider();
            return;
        }
        auto [lo, hi] = blocks[bi];
        std::sort(verts.begin() + lo, verts.begin() + hi);
        do {
            self(self, bi + 1);
        } while (std::next_permutation(verts.begin() + lo, verts.begin() + hi));
    };
    rec(rec, 0);
    return best;
}

inline Poset to_poset(const SmallPoset& p) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            if (p.above[i] >> j & 1) edges.emplace_back(i, j);
    return Poset::from_covers(p.n, edges);
}

}  // namespace detail

// All posets on exactly n elements, one representative per isomorphism
// class (n <= 8). Built level by level: every poset on n elements arises
// from one on n-1 by inserting a fresh element with a down-set D and an
// up-set U satisfying D x U already in the order.
inline std::vector<Poset> all_posets_up_to_iso(int n) {
    require(n >= 0 && n <= 8, errc::out_of_range, "corpus generator capped at 8 elements");
    std::vector<detail::SmallPoset> level{detail::SmallPoset{}};
    for (int m = 1; m <= n; ++m) {
        std::unordered_set<uint64_t> raw_seen, canon_seen;
        std::vector<detail::SmallPoset> next;
        for (const detail::SmallPoset& p : level) {
            auto below = p.below_masks();
            int full = (1 << p.n) - 1;
            for (int d = 0; d <= full; ++d) {
                bool down_closed = true;
                for (int v = 0; v < p.n && down_closed; ++v)
                    if (d >> v & 1) down_closed = (below[v] & ~d) == 0;
                if (!down_closed) continue;
                // u must avoid d, be up-closed, and sit above every element of d
                int allowed = full & ~d;
                for (int v = 0; v < p.n; ++v)
                    if (d >> v & 1) allowed &= p.above[v];
                for (int u = allowed;; u = (u - 1) & allowed) {
                    bool up_closed = true;
                    for (int v = 0; v < p.n && up_closed; ++v)
                        if (u >> v & 1) up_closed = (p.above[v] & ~u) == 0;
                    if (up_closed) {
                        detail::SmallPoset q;
                        q.n = p.n + 1;
                        q.above = p.above;
                        q.above[p.n] = uint8_t(u);
                        for (int v = 0; v < p.n; ++v)
                            if (d >> v & 1) q.above[v] |= uint8_t(1) << p.n;
                        if (raw_seen.insert(q.key()).second &&
                            canon_seen.insert(detail::canonical_key(q)).second)
                            next.push_back(q);
                    }
                    if (u == 0) break;
                }
            }
        }
        level = std::move(next);
    }
    std::vector<Poset> out;
    out.reserve(level.size());
    for (const detail::SmallPoset& p : level) out.push_back(detail::to_poset(p));
    return out;
}

// Random poset: each upward pair kept as a relation with the given density.
inline Poset random_poset(int n, std::mt19937& rng, double density = 0.35) {
    std::bernoulli_distribution coin(density);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Poset::from_covers(n, edges);
}

// All partitions of exactly w, in lexicographically decreasing order.
inline std::vector<Partition> partitions_of_weight(int w) {
    std::vector<Partition> out;
    std::vector<int> parts;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(parts));
            return;
        }
        for (int k = std::min(remaining, max_part); k >= 1; --k) {
            parts.push_back(k);
            self(self, remaining - k, k);
            parts.pop_back();
        }
    };
    rec(rec, w, w);
    return out;
}

}  // namespace posetprob
