#pragma once

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "posetprob/blocking.hpp"
#include "posetprob/ideal_lattice.hpp"
#include "posetprob/poset.hpp"
#include "posetprob/rational.hpp"

namespace posetprob {

// One-indexed (row, col) cell of a Ferrers diagram, British notation.
struct Cell {
    int row = 0;
    int col = 0;

    bool operator==(const Cell& o) const { return row == o.row && col == o.col; }
    auto operator<=>(const Cell& o) const = default;
    // componentwise order of the cell poset
    bool dominates(const Cell& o) const { return o.row <= row && o.col <= col; }
};

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, errc::invalid_shape, "parts must be positive");
            require(i == 0 || parts_[i - 1] >= parts_[i], errc::invalid_shape,
                    "parts must be weakly decreasing");
        }
        for (int x : parts_) weight_ += x;
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long weight() const { return weight_; }
    bool empty() const { return parts_.empty(); }

    int part(int row) const {  // one-indexed, zero beyond the last row
        return row >= 1 && row <= length() ? parts_[row - 1] : 0;
    }
    bool has_cell(Cell c) const {
        return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
    }
    bool contains(const Partition& inner) const {
        if (inner.length() > length()) return false;
        for (int i = 0; i < inner.length(); ++i)
            if (inner.parts_[i] > parts_[i]) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < length(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

private:
    std::vector<int> parts_;
    long weight_ = 0;
};

inline Partition conjugate(const Partition& p) {
    std::vector<int> parts;
    if (!p.empty()) {
        parts.assign(p.parts()[0], 0);
        for (int x : p.parts())
            for (int j = 0; j < x; ++j) ++parts[j];
    }
    return Partition(std::move(parts));
}

class SkewShape {
public:
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        require(outer_.contains(inner_), errc::invalid_shape,
                "inner shape " + inner_.to_string() + " not contained in " + outer_.to_string());
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    long weight() const { return outer_.weight() - inner_.weight(); }

    std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

private:
    Partition outer_;
    Partition inner_;
};

// Cells of p in row-major order; used as the element order of cell_poset.
inline std::vector<Cell> cells_of(const Partition& p) {
    std::vector<Cell> out;
    out.reserve(p.weight());
    for (int i = 1; i <= p.length(); ++i)
        for (int j = 1; j <= p.part(i); ++j) out.push_back({i, j});
    return out;
}

inline int cell_index(const Partition& p, Cell c) {
    require(p.has_cell(c), errc::cell_outside_shape,
            "cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") outside " +
                p.to_string());
    int idx = 0;
    for (int i = 1; i < c.row; ++i) idx += p.part(i);
    return idx + c.col - 1;
}

// P_lambda: cells ordered componentwise, covers are the unit steps.
inline Poset cell_poset(const Partition& p) {
    std::vector<Cell> cells = cells_of(p);
    std::vector<std::string> labels;
    labels.reserve(cells.size());
    for (Cell c : cells)
        labels.push_back("(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")");
    std::vector<std::pair<int, int>> edges;
    for (size_t k = 0; k < cells.size(); ++k) {
        Cell c = cells[k];
        if (p.has_cell({c.row, c.col + 1}))
            edges.emplace_back(static_cast<int>(k), cell_index(p, {c.row, c.col + 1}));
        if (p.has_cell({c.row + 1, c.col}))
            edges.emplace_back(static_cast<int>(k), cell_index(p, {c.row + 1, c.col}));
    }
    return Poset::from_covers(static_cast<int>(cells.size()), edges, std::move(labels));
}

// arm + leg + 1, via the conjugate: h(i,j) = lambda_i - j + lambda'_j - i + 1.
inline int hook_length(const Partition& p, Cell c) {
    require(p.has_cell(c), errc::cell_outside_shape,
            "hook cell outside " + p.to_string());
    Partition conj = conjugate(p);
    return p.part(c.row) - c.col + conj.part(c.col) - c.row + 1;
}

inline BigInt hook_product(const Partition& p, const std::vector<Cell>& cells) {
    Partition conj = conjugate(p);
    BigInt h = 1;
    for (Cell c : cells) {
        require(p.has_cell(c), errc::cell_outside_shape,
                "hook cell outside " + p.to_string());
        h *= p.part(c.row) - c.col + conj.part(c.col) - c.row + 1;
    }
    return h;
}

inline BigInt hook_product_all(const Partition& p) { return hook_product(p, cells_of(p)); }

// Frame-Robinson-Thrall: f = |lambda|! / prod of hooks.
inline BigInt f_hook(const Partition& p) {
    BigInt f = factorial(p.weight());
    mpz_divexact(f.get_mpz_t(), f.get_mpz_t(), hook_product_all(p).get_mpz_t());
    return f;
}

// Jacobi-Trudi-Aitken determinant for skew SYT counts:
// f = |lambda/mu|! * det( g(lambda_i - mu_j - i + j) ), g(m) = 1/m! (0 for m < 0).
// Worked over exact rationals; the result must come out integral.
inline BigInt f_skew_aitken(const SkewShape& s) {
    int n = s.outer().length();
    auto g = [](long m) { return m < 0 ? Rational(0) : make_rational(1, factorial(m)); };
    std::vector<std::vector<Rational>> mat(n, std::vector<Rational>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            mat[i - 1][j - 1] = g(s.outer().part(i) - s.inner().part(j) - i + j);

    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row)
            if (mat[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            det = -det;
        }
        det *= mat[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (mat[row][col] == 0) continue;
            Rational factor = mat[row][col] / mat[col][col];
            for (int j = col; j < n; ++j) mat[row][j] -= factor * mat[col][j];
        }
    }
    Rational f = Rational(factorial(s.weight())) * det;
    require(f.get_den() == 1 && f >= 0, errc::non_integral_result,
            "determinant formula did not produce a count for " + s.to_string());
    return f.get_num();
}

// A diagram is a |mu|-subset of lambda's cells; stored sorted.
using ExcitedDiagram = std::vector<Cell>;

// All diagrams reachable from mu by excited moves (i,j) -> (i+1,j+1), legal
// when the three cells to the right, below, and diagonal are in lambda and
// vacant. Plain BFS with a visited set; mu comes first.
inline std::vector<ExcitedDiagram> excited_diagrams(const SkewShape& s) {
    const Partition& outer = s.outer();
    std::vector<Cell> cells = cells_of(outer);
    Bitset start(static_cast<int>(cells.size()));
    for (Cell c : cells_of(s.inner())) start.set(cell_index(outer, c));

    std::vector<Bitset> queue{start};
    std::unordered_set<Bitset, BitsetHash> seen{start};
    for (size_t head = 0; head < queue.size(); ++head) {
        Bitset d = queue[head];
        d.for_each([&](int k) {
            Cell c = cells[k];
            Cell right{c.row, c.col + 1}, down{c.row + 1, c.col}, diag{c.row + 1, c.col + 1};
            for (Cell t : {right, down, diag})
                if (!outer.has_cell(t) || d.test(cell_index(outer, t))) return;
            Bitset e = d;
            e.reset(k);
            e.set(cell_index(outer, diag));
            if (seen.insert(e).second) queue.push_back(std::move(e));
        });
    }

    std::vector<ExcitedDiagram> out;
    out.reserve(queue.size());
    for (const Bitset& d : queue) {
        ExcitedDiagram diag;
        d.for_each([&](int k) { diag.push_back(cells[k]); });
        out.push_back(std::move(diag));
    }
    return out;
}

// Naruse's formula in the hook-product form:
// f = |lambda/mu|! * sum_C H(C) / H(lambda).
inline BigInt f_skew_naruse(const SkewShape& s) {
    BigInt sum = 0;
    for (const ExcitedDiagram& d : excited_diagrams(s)) sum += hook_product(s.outer(), d);
    BigInt numerator = factorial(s.weight()) * sum;
    BigInt denominator = hook_product_all(s.outer());
    require(mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()),
            errc::non_integral_result, "excited-diagram sum not divisible for " + s.to_string());
    BigInt f;
    mpz_divexact(f.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return f;
}

// Strips the full left columns of a skew shape: with r = length(outer) and
// k = inner_r > 0, subtracts k from every part of both shapes. SYT counts
// are unchanged.
inline SkewShape reduce(const SkewShape& s) {
    int r = s.outer().length();
    int k = s.inner().part(r);
    require(k > 0, errc::not_reducible,
            "inner shape does not fill the first column of " + s.to_string());
    std::vector<int> outer, inner;
    for (int i = 1; i <= r; ++i) outer.push_back(s.outer().part(i) - k);
    for (int i = 1; i <= s.inner().length(); ++i) inner.push_back(s.inner().part(i) - k);
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

namespace detail {

inline OrderIdeal partition_to_ideal(const Partition& ambient, const Partition& sub) {
    std::vector<int> members;
    for (Cell c : cells_of(sub)) members.push_back(cell_index(ambient, c));
    return OrderIdeal(std::move(members));
}

inline Partition ideal_to_partition(const Partition& ambient, const OrderIdeal& ideal) {
    std::vector<int> rows(ambient.length(), 0);
    std::vector<Cell> cells = cells_of(ambient);
    for (int k : ideal.members) ++rows[cells[k].row - 1];
    return Partition(std::move(rows));
}

// T + {alpha} as a partition; valid because T + {alpha} is an order ideal.
inline Partition with_cell(const Partition& t, Cell alpha) {
    std::vector<int> parts(t.parts());
    if (alpha.row > static_cast<int>(parts.size())) parts.resize(alpha.row, 0);
    parts[alpha.row - 1] = alpha.col;
    return Partition(std::move(parts));
}

inline void check_incomparable_cells(const Partition& p, Cell a, Cell b) {
    require(p.has_cell(a) && p.has_cell(b), errc::cell_outside_shape,
            "cell outside " + p.to_string());
    require(!(a == b), errc::same_element, "cells coincide");
    require(!a.dominates(b) && !b.dominates(a), errc::comparable_pair,
            "cells are comparable");
}

}  // namespace detail

// Blocking ideals of the cell poset, as subpartitions, sorted.
inline std::vector<Partition> blocking_partitions(const Partition& p, Cell a, Cell b) {
    detail::check_incomparable_cells(p, a, b);
    Poset poset = cell_poset(p);
    std::vector<Partition> out;
    for (const OrderIdeal& t : blocking_ideals(poset, cell_index(p, a), cell_index(p, b)))
        out.push_back(detail::ideal_to_partition(p, t));
    std::sort(out.begin(), out.end());
    return out;
}

// e(P_lambda; a < b) = sum_T f^T * f^{lambda/(T + {a})}, all factors by
// closed formulas (hook lengths and the Aitken determinant).
inline BigInt e_partition(const Partition& p, Cell a, Cell b) {
    detail::check_incomparable_cells(p, a, b);
    BigInt total = 0;
    for (const Partition& t : blocking_partitions(p, a, b)) {
        SkewShape rest(p, detail::with_cell(t, a));
        total += f_hook(t) * f_skew_aitken(rest);
    }
    return total;
}

inline Rational probability_partition(const Partition& p, Cell a, Cell b) {
    require(p.has_cell(a) && p.has_cell(b), errc::cell_outside_shape,
            "cell outside " + p.to_string());
    require(!(a == b), errc::same_element, "cells coincide");
    if (b.dominates(a)) return Rational(1);
    if (a.dominates(b)) return Rational(0);
    return make_rational(e_partition(p, a, b), f_hook(p));
}

}  // namespace posetprob
