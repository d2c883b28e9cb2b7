#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "posetprob/ideal_lattice.hpp"
#include "posetprob/poset.hpp"
#include "posetprob/rational.hpp"

namespace posetprob {

// The three-part split of the ground set around an incomparable pair:
//   fixed    A(alpha)        = everything strictly below alpha
//   complete D(alpha,beta)   = everything below neither alpha nor beta
//   variable G(alpha,beta)   = complete minus fixed
// A blocking ideal is exactly fixed + (an order ideal of variable).
struct BlockingDecomposition {
    OrderIdeal fixed;
    std::vector<int> variable;
    OrderIdeal complete;
    int alpha = -1;
    int beta = -1;
};

inline BlockingDecomposition decompose(const Poset& p, int a, int b) {
    require(p.incomparable(a, b), errc::comparable_pair,
            "decompose requires an incomparable pair");
    BlockingDecomposition d;
    d.alpha = a;
    d.beta = b;
    d.fixed = OrderIdeal(p.below(a).to_vector());
    Bitset dominated = p.above(a) | p.above(b);
    dominated.set(a);
    dominated.set(b);
    Bitset complete = difference(p.full_mask(), dominated);
    require(p.is_order_ideal(complete), errc::invalid_case,
            "complete part is not down-closed");  // cannot happen; guards the invariant
    d.complete = OrderIdeal(complete.to_vector());
    Bitset variable = difference(complete, p.below(a));
    d.variable = variable.to_vector();
    return d;
}

// All ideals T with alpha,beta outside T and T + {alpha} still an ideal,
// generated as fixed + V over the order ideals V of the variable part.
inline std::vector<OrderIdeal> blocking_ideals(const Poset& p, int a, int b) {
    BlockingDecomposition d = decompose(p, a, b);
    Poset variable = p.induced(std::span<const int>(d.variable));
    std::vector<OrderIdeal> out;
    for (const OrderIdeal& v : all_order_ideals(variable)) {
        std::vector<int> members = d.fixed.members;
        for (int k : v.members) members.push_back(d.variable[k]);
        OrderIdeal t(std::move(members));
        // each result must satisfy the defining predicate verbatim
        Bitset mask = p.to_mask(t.members);
        bool ok = !t.contains(a) && !t.contains(b) && p.is_order_ideal(mask);
        mask.set(a);
        ok = ok && p.is_order_ideal(mask);
        require(ok, errc::invalid_case, "generated set is not a blocking ideal");
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const OrderIdeal& x, const OrderIdeal& y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return x.members < y.members;
    });
    return out;
}

// e(P; a < b) = sum over blocking ideals T of e(T) * e(P \ (T + {a})).
inline BigInt e_blocking(const Poset& p, int a, int b, long cap = kDefaultIdealCap) {
    BigInt total = 0;
    for (const OrderIdeal& t : blocking_ideals(p, a, b)) {
        Bitset rest = p.full_mask();
        rest.subtract(p.to_mask(t.members));
        rest.reset(a);
        total += count_linear_extensions(p.induced(t), cap) *
                 count_linear_extensions(p.induced(rest), cap);
    }
    return total;
}

// P(P; a < b). Zero or one for comparable pairs, exact fraction otherwise.
inline Rational probability(const Poset& p, int a, int b, long cap = kDefaultIdealCap) {
    require(a != b, errc::same_element, "probability(a,a)");
    if (p.less(a, b)) return Rational(1);
    if (p.less(b, a)) return Rational(0);
    return make_rational(e_blocking(p, a, b, cap), count_linear_extensions(p, cap));
}

// Both orientations of the blocking expansion must tile e(P) exactly.
inline bool split_check(const Poset& p, int a, int b, long cap = kDefaultIdealCap) {
    require(p.incomparable(a, b), errc::comparable_pair, "split_check requires an incomparable pair");
    return e_blocking(p, a, b, cap) + e_blocking(p, b, a, cap) ==
           count_linear_extensions(p, cap);
}

struct BalancedPair {
    int x = -1;
    int y = -1;
    Rational value;
};

// The pair maximizing min(P(x<y), P(y<x)); the 1/3-2/3 conjecture says the
// value is at least 1/3 for every non-chain poset. Ties break to the
// lexicographically smallest index pair.
inline BalancedPair balanced_pair_scan(const Poset& p, long cap = kDefaultIdealCap) {
    require(!p.is_chain(), errc::is_chain, "scan needs an incomparable pair");
    BigInt total = count_linear_extensions(p, cap);
    BalancedPair best;
    best.value = Rational(-1);
    for (int x = 0; x < p.size(); ++x) {
        for (int y = x + 1; y < p.size(); ++y) {
            if (!p.incomparable(x, y)) continue;
            BigInt ahead = e_blocking(p, x, y, cap);
            Rational v = make_rational(std::min(ahead, BigInt(total - ahead)), total);
            if (v > best.value) best = {x, y, v};
        }
    }
    return best;
}

// Every incomparable pair with its forward probability, for table dumps.
inline std::vector<std::tuple<int, int, Rational>> probability_table(
    const Poset& p, long cap = kDefaultIdealCap) {
    BigInt total = count_linear_extensions(p, cap);
    std::vector<std::tuple<int, int, Rational>> out;
    for (int x = 0; x < p.size(); ++x)
        for (int y = x + 1; y < p.size(); ++y) {
            if (!p.incomparable(x, y)) continue;
            out.emplace_back(x, y, make_rational(e_blocking(p, x, y, cap), total));
        }
    return out;
}

}  // namespace posetprob
