#pragma once

#include <algorithm>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "posetprob/poset.hpp"
#include "posetprob/rational.hpp"

namespace posetprob {

inline constexpr long kDefaultIdealCap = 10'000'000;
inline constexpr int kDefaultEnumerationCap = 12;

// A linear extension as the sequence of elements in placement order; always
// a permutation of 0..n-1 with every element after all of its lower bounds.
using LinearExtension = std::vector<int>;

namespace detail {

// Every order ideal of p as a bitmask, found by BFS from the empty ideal:
// each ideal grows by one minimal element of its complement.
inline std::vector<Bitset> ideal_masks(const Poset& p, long cap) {
    std::vector<Bitset> out;
    std::unordered_set<Bitset, BitsetHash> seen;
    Bitset empty(p.size());
    out.push_back(empty);
    seen.insert(empty);
    for (size_t head = 0; head < out.size(); ++head) {
        Bitset u = out[head];
        for (int m = 0; m < p.size(); ++m) {
            if (u.test(m) || !p.below(m).is_subset_of(u)) continue;
            Bitset v = u;
            v.set(m);
            if (seen.insert(v).second) {
                require(static_cast<long>(out.size()) < cap, errc::size_limit_exceeded,
                        "more than " + std::to_string(cap) + " order ideals");
                out.push_back(std::move(v));
            }
        }
    }
    return out;
}

}  // namespace detail

inline std::vector<OrderIdeal> all_order_ideals(const Poset& p, long cap = kDefaultIdealCap) {
    std::vector<OrderIdeal> out;
    for (const Bitset& m : detail::ideal_masks(p, cap)) out.emplace_back(m.to_vector());
    std::sort(out.begin(), out.end(), [](const OrderIdeal& a, const OrderIdeal& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.members < b.members;
    });
    return out;
}

// e(P): saturated chains of J(P) from bottom to top, by dynamic programming
// over the ideal lattice. Never enumerates extensions.
inline BigInt count_linear_extensions(const Poset& p, long cap = kDefaultIdealCap) {
    std::vector<Bitset> ideals = detail::ideal_masks(p, cap);
    std::sort(ideals.begin(), ideals.end(),
              [](const Bitset& a, const Bitset& b) { return a.count() < b.count(); });
    std::unordered_map<Bitset, BigInt, BitsetHash> chains;
    chains.reserve(ideals.size());
    for (const Bitset& u : ideals) {
        if (u.empty()) {
            chains.emplace(u, 1);
            continue;
        }
        BigInt total = 0;
        for (int m : p.maximal_elements(u)) {
            Bitset prev = u;
            prev.reset(m);
            total += chains.at(prev);
        }
        chains.emplace(u, std::move(total));
    }
    return chains.at(p.full_mask());
}

// Yields the linear extensions of p one by one, in lexicographic order of the
// index sequences. No size guard: the caller bounds consumption.
class LinearExtensionStream {
public:
    explicit LinearExtensionStream(const Poset& p) : poset_(&p), used_(p.size()) {
        sequence_.reserve(p.size());
    }

    std::optional<LinearExtension> next() {
        if (done_) return std::nullopt;
        if (first_) {
            first_ = false;
            descend();
            return sequence_;
        }
        if (!advance()) {
            done_ = true;
            return std::nullopt;
        }
        return sequence_;
    }

private:
    // Greedily completes the prefix with the least admissible element at
    // every position. Any prefix extends: the unplaced set always has a
    // minimal element.
    void descend() {
        while (static_cast<int>(sequence_.size()) < poset_->size())
            push(next_candidate(0));
    }

    // Steps to the lexicographically next extension: unwind until some
    // position admits a larger candidate, then descend.
    bool advance() {
        while (!sequence_.empty()) {
            int last = sequence_.back();
            pop();
            int c = next_candidate(last + 1);
            if (c >= 0) {
                push(c);
                descend();
                return true;
            }
        }
        return false;
    }

    int next_candidate(int from) const {
        for (int x = from; x < poset_->size(); ++x) {
            if (used_[x]) continue;
            bool ready = true;
            poset_->below(x).for_each([&](int y) {
                if (!used_[y]) ready = false;
            });
            if (ready) return x;
        }
        return -1;
    }

    void push(int x) {
        sequence_.push_back(x);
        used_[x] = true;
    }
    void pop() {
        used_[sequence_.back()] = false;
        sequence_.pop_back();
    }

    const Poset* poset_;
    std::vector<bool> used_;
    std::vector<int> sequence_;
    bool first_ = true;
    bool done_ = false;
};

inline std::vector<LinearExtension> linear_extensions(const Poset& p) {
    LinearExtensionStream stream(p);
    std::vector<LinearExtension> out;
    while (auto ext = stream.next()) out.push_back(std::move(*ext));
    return out;
}

// e(P; a < b) by filtering the enumeration stream. This is the brute-force
// oracle the rest of the library is validated against; it refuses posets
// above the enumeration cap instead of hanging.
inline BigInt e_with_constraint(const Poset& p, int a, int b,
                                int enumeration_cap = kDefaultEnumerationCap) {
    require(a != b, errc::same_element, "e_with_constraint(a,a)");
    require(p.size() <= enumeration_cap, errc::size_limit_exceeded,
            "enumeration oracle capped at " + std::to_string(enumeration_cap) + " elements");
    LinearExtensionStream stream(p);
    BigInt count = 0;
    while (auto ext = stream.next()) {
        for (int x : *ext) {
            if (x == a) {
                ++count;
                break;
            }
            if (x == b) break;
        }
    }
    return count;
}

// Number of saturated chains of J(P) between two nested ideals. Equals
// e(subposet on upper minus lower): below an ideal J(P) restricts to J(T),
// and above it to J(P minus T).
inline BigInt chain_count_interval(const Poset& p, const OrderIdeal& lower,
                                   const OrderIdeal& upper, long cap = kDefaultIdealCap) {
    require(p.is_order_ideal(lower), errc::not_nested, "lower set is not an order ideal");
    require(p.is_order_ideal(upper), errc::not_nested, "upper set is not an order ideal");
    Bitset lo = p.to_mask(lower.members);
    Bitset hi = p.to_mask(upper.members);
    require(lo.is_subset_of(hi), errc::not_nested, "lower is not contained in upper");
    return count_linear_extensions(p.induced(difference(hi, lo)), cap);
}

}  // namespace posetprob
