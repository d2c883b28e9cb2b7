#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "posetprob/bitset.hpp"
#include "posetprob/error.hpp"

namespace posetprob {

// A down-closed subset of a poset, kept as a sorted index vector.
struct OrderIdeal {
    std::vector<int> members;

    OrderIdeal() = default;
    explicit OrderIdeal(std::vector<int> m) : members(std::move(m)) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
    }

    int size() const { return static_cast<int>(members.size()); }
    bool contains(int x) const {
        return std::binary_search(members.begin(), members.end(), x);
    }
    bool operator==(const OrderIdeal& o) const { return members == o.members; }
    bool operator<(const OrderIdeal& o) const { return members < o.members; }
};

// Finite poset on elements 0..n-1. Stores the strict order as closure
// bit-rows (above/below) plus the cover edges (transitive reduction).
// Immutable after construction; all queries are const.
class Poset {
public:
    Poset() = default;

    // Builds the poset whose order is the transitive closure of `edges`
    // ((u,v) meaning u < v). Duplicate and transitively implied edges are
    // merged away; a directed cycle is an error.
    static Poset from_covers(int n, std::span<const std::pair<int, int>> edges,
                             std::vector<std::string> labels = {}) {
        require(n >= 0, errc::index_out_of_range, "negative element count");
        Poset p;
        p.n_ = n;
        p.labels_ = std::move(labels);
        require(p.labels_.empty() || static_cast<int>(p.labels_.size()) == n,
                errc::parse_error, "label count does not match n");
        std::vector<std::vector<int>> succ(n);
        for (auto [u, v] : edges) {
            require(u >= 0 && u < n && v >= 0 && v < n, errc::index_out_of_range,
                    "edge endpoint outside [0,n)");
            require(u != v, errc::cycle_detected, "self-loop");
            succ[u].push_back(v);
        }
        p.build_closure(succ);
        p.reduce_covers();
        return p;
    }

    static Poset from_covers(int n, const std::vector<std::pair<int, int>>& edges,
                             std::vector<std::string> labels = {}) {
        return from_covers(n, std::span<const std::pair<int, int>>(edges), std::move(labels));
    }

    static Poset antichain(int n) {
        return from_covers(n, std::vector<std::pair<int, int>>{});
    }

    static Poset chain(int n) {
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
        return from_covers(n, e);
    }

    int size() const { return n_; }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    std::string label(int x) const {
        check_index(x);
        return labels_.empty() ? std::to_string(x) : labels_[x];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    // Strictly-greater / strictly-smaller element sets (closure rows).
    const Bitset& above(int x) const { check_index(x); return above_[x]; }
    const Bitset& below(int x) const { check_index(x); return below_[x]; }

    bool less(int x, int y) const {
        check_index(x);
        check_index(y);
        return above_[x].test(y);
    }
    bool leq(int x, int y) const { return x == y || less(x, y); }

    bool incomparable(int x, int y) const {
        require(x != y, errc::same_element, "incomparable(x,x)");
        return !less(x, y) && !less(y, x);
    }

    bool is_chain() const {
        for (int x = 0; x < n_; ++x)
            if (above_[x].count() + below_[x].count() != n_ - 1) return false;
        return true;
    }

    Bitset full_mask() const {
        Bitset m(n_);
        for (int i = 0; i < n_; ++i) m.set(i);
        return m;
    }

    // Closed principal ideal {y : y <= x}.
    OrderIdeal principal_ideal(int x) const {
        check_index(x);
        Bitset m = below_[x];
        m.set(x);
        return OrderIdeal(m.to_vector());
    }

    // Closed principal filter {y : y >= x}.
    std::vector<int> principal_filter(int x) const {
        check_index(x);
        Bitset m = above_[x];
        m.set(x);
        return m.to_vector();
    }

    bool is_order_ideal(const Bitset& s) const {
        bool ok = true;
        s.for_each([&](int u) {
            if (ok && !below_[u].is_subset_of(s)) ok = false;
        });
        return ok;
    }
    bool is_order_ideal(std::span<const int> s) const { return is_order_ideal(to_mask(s)); }
    bool is_order_ideal(const OrderIdeal& s) const {
        return is_order_ideal(std::span<const int>(s.members));
    }

    Bitset to_mask(std::span<const int> s) const {
        Bitset m(n_);
        for (int x : s) {
            check_index(x);
            m.set(x);
        }
        return m;
    }

    struct AddRelationResult;

    // Poset with (a,b) and all transitive consequences added; flagged as
    // unchanged when a <= b already held.
    AddRelationResult add_relation(int a, int b) const;

    // Subposet induced on `elements`; element k of the result corresponds to
    // elements[k] (after sorting), labels carried over.
    Poset induced(std::span<const int> elements) const {
        std::vector<int> elems(elements.begin(), elements.end());
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        Poset p;
        p.n_ = static_cast<int>(elems.size());
        if (!labels_.empty()) {
            p.labels_.reserve(elems.size());
            for (int e : elems) p.labels_.push_back(label(e));
        }
        p.above_.assign(p.n_, Bitset(p.n_));
        p.below_.assign(p.n_, Bitset(p.n_));
        for (int i = 0; i < p.n_; ++i)
            for (int j = 0; j < p.n_; ++j)
                if (less(elems[i], elems[j])) {
                    p.above_[i].set(j);
                    p.below_[j].set(i);
                }
        p.reduce_covers();
        return p;
    }
    Poset induced(const Bitset& mask) const {
        auto v = mask.to_vector();
        return induced(std::span<const int>(v));
    }
    Poset induced(const OrderIdeal& ideal) const {
        return induced(std::span<const int>(ideal.members));
    }

    std::vector<int> minimal_elements(const Bitset& s) const {
        std::vector<int> out;
        s.for_each([&](int x) {
            if (!below_[x].intersects(s)) out.push_back(x);
        });
        return out;
    }
    std::vector<int> maximal_elements(const Bitset& s) const {
        std::vector<int> out;
        s.for_each([&](int x) {
            if (!above_[x].intersects(s)) out.push_back(x);
        });
        return out;
    }

    bool same_order_as(const Poset& o) const {
        if (n_ != o.n_) return false;
        for (int i = 0; i < n_; ++i)
            if (!(above_[i] == o.above_[i])) return false;
        return true;
    }

private:
    void check_index(int x) const {
        require(x >= 0 && x < n_, errc::index_out_of_range,
                "element " + std::to_string(x) + " outside [0," + std::to_string(n_) + ")");
    }

    void build_closure(const std::vector<std::vector<int>>& succ) {
        above_.assign(n_, Bitset(n_));
        below_.assign(n_, Bitset(n_));
        // reverse topological order via Kahn; leftovers mean a cycle
        std::vector<int> indeg(n_, 0);
        for (int u = 0; u < n_; ++u)
            for (int v : succ[u]) ++indeg[v];
        std::vector<int> order;
        order.reserve(n_);
        for (int u = 0; u < n_; ++u)
            if (indeg[u] == 0) order.push_back(u);
        for (size_t k = 0; k < order.size(); ++k)
            for (int v : succ[order[k]])
                if (--indeg[v] == 0) order.push_back(v);
        require(static_cast<int>(order.size()) == n_, errc::cycle_detected,
                "cover edges contain a directed cycle");
        for (int k = n_ - 1; k >= 0; --k) {
            int u = order[k];
            for (int v : succ[u]) {
                above_[u].set(v);
                above_[u] |= above_[v];
            }
        }
        for (int u = 0; u < n_; ++u)
            above_[u].for_each([&](int v) { below_[v].set(u); });
        for (int u = 0; u < n_; ++u)
            require(!above_[u].test(u), errc::cycle_detected,
                    "cover edges contain a directed cycle");
    }

    // covers_ = transitive reduction: u -< v iff nothing sits strictly between.
    void reduce_covers() {
        covers_.clear();
        for (int u = 0; u < n_; ++u)
            above_[u].for_each([&](int v) {
                if (!above_[u].intersects(below_[v])) covers_.emplace_back(u, v);
            });
        std::sort(covers_.begin(), covers_.end());
    }

    int n_ = 0;
    std::vector<std::string> labels_;
    std::vector<Bitset> above_;
    std::vector<Bitset> below_;
    std::vector<std::pair<int, int>> covers_;
};

struct Poset::AddRelationResult {
    Poset poset;
    bool changed;  // false when a <= b already held
};

inline Poset::AddRelationResult Poset::add_relation(int a, int b) const {
    check_index(a);
    check_index(b);
    require(a != b, errc::same_element, "add_relation(a,a)");
    require(!less(b, a), errc::would_create_cycle, "relation contradicts existing order");
    if (less(a, b)) return {*this, false};
    Poset p;
    p.n_ = n_;
    p.labels_ = labels_;
    p.above_ = above_;
    p.below_ = below_;
    Bitset up = above_[b];
    up.set(b);
    Bitset down = below_[a];
    down.set(a);
    down.for_each([&](int x) { p.above_[x] |= up; });
    up.for_each([&](int y) { p.below_[y] |= down; });
    p.reduce_covers();
    return {std::move(p), true};
}

}  // namespace posetprob
