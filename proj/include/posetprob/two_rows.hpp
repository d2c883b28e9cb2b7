#pragma once

#include <vector>

#include "posetprob/rational.hpp"
#include "posetprob/tableaux.hpp"

namespace posetprob {

// Incomparable cells of a two-row shape sit in distinct rows. Two cases:
//   case 1: alpha = (1,a), beta = (2,b) with b < a
//   case 2: alpha = (2,a), beta = (1,b) with a < b
struct TwoRowCase {
    int lambda1 = 0;
    int lambda2 = 0;
    Cell alpha;
    Cell beta;
    int a = 0;      // alpha's column
    int b = 0;      // beta's column
    int variant = 0;  // 1 or 2

    static TwoRowCase make(int lambda1, int lambda2, Cell alpha, Cell beta) {
        require(lambda1 >= lambda2 && lambda2 >= 1, errc::invalid_shape,
                "need lambda1 >= lambda2 >= 1");
        TwoRowCase c;
        c.lambda1 = lambda1;
        c.lambda2 = lambda2;
        c.alpha = alpha;
        c.beta = beta;
        Partition shape({lambda1, lambda2});
        require(shape.has_cell(alpha) && shape.has_cell(beta), errc::invalid_case,
                "cell outside the shape");
        require(alpha.row != beta.row, errc::invalid_case,
                "cells in the same row are comparable");
        c.a = alpha.col;
        c.b = beta.col;
        if (alpha.row == 1) {
            require(beta.row == 2 && c.b < c.a, errc::invalid_case,
                    "cells are comparable");
            c.variant = 1;
        } else {
            require(alpha.row == 2 && beta.row == 1 && c.a < c.b, errc::invalid_case,
                    "cells are comparable");
            c.variant = 2;
        }
        return c;
    }
};

// f^(l1,l2) = (l1+l2)! (1 + l1 - l2) / ((l1+1)! l2!)
inline BigInt f_two_row(long l1, long l2) {
    require(l1 >= l2 && l2 >= 0, errc::invalid_shape, "need l1 >= l2 >= 0");
    BigInt num = factorial(l1 + l2) * (1 + l1 - l2);
    BigInt den = factorial(l1 + 1) * factorial(l2);
    BigInt f;
    mpz_divexact(f.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return f;
}

// Closed-form blocking sets:
//   case 1: { (a-1, t) : 0 <= t <= b-1 }
//   case 2: { (t, a-1) : a <= t <= b-1 }
inline std::vector<Partition> blocking_two_row(const TwoRowCase& c) {
    std::vector<Partition> out;
    if (c.variant == 1) {
        for (int t = 0; t <= c.b - 1; ++t) out.push_back(Partition({c.a - 1, t}));
    } else {
        for (int t = c.a; t <= c.b - 1; ++t) out.push_back(Partition({t, c.a - 1}));
    }
    return out;
}

// e(P; alpha < beta) from the closed-form blocking sets, each skew factor
// reduced before the determinant evaluation.
inline BigInt e_two_row(const TwoRowCase& c) {
    BigInt total = 0;
    if (c.variant == 1) {
        // sum_t f^(a-1,t) * f^{lambda/(a,t)}, reduced to (l1-t,l2-t)/(a-t)
        for (int t = 0; t <= c.b - 1; ++t) {
            SkewShape rest(Partition({c.lambda1 - t, c.lambda2 - t}), Partition({c.a - t}));
            total += f_two_row(c.a - 1, t) * f_skew_aitken(rest);
        }
    } else {
        // sum_t f^(t,a-1) * f^{lambda/(t,a)}, reduced to (l1-a,l2-a)/(t-a)
        for (int t = c.a; t <= c.b - 1; ++t) {
            SkewShape rest(Partition({c.lambda1 - c.a, c.lambda2 - c.a}),
                           Partition({t - c.a}));
            total += f_two_row(t, c.a - 1) * f_skew_aitken(rest);
        }
    }
    return total;
}

inline Rational probability_two_row(const TwoRowCase& c) {
    return make_rational(e_two_row(c), f_two_row(c.lambda1, c.lambda2));
}

// P(P_(n,n); (2,b) < (1,b+1)) = C_b C_{n-b} / C_n
inline Rational catalan_probability(int n, int b) {
    require(1 <= b && b < n, errc::out_of_range, "need 1 <= b < n");
    return make_rational(catalan(b) * catalan(n - b), catalan(n));
}

// Infinite-strip limit of the warmup case: 4^{-b} C_b.
inline Rational limit_catalan(int b) {
    require(b >= 1, errc::out_of_range, "need b >= 1");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 4, static_cast<unsigned long>(b));
    return make_rational(catalan(b), den);
}

// Limit of P(P_lambda; (1,a) < (2,b)) as both rows grow with bounded
// difference, assembled from the per-factor limits:
//   (a+1) 2^{-a}  +  sum_{t=1}^{b-1} f^(a-1,t) (a-t+1) 2^{-(a-t)} 2^{-2t}
inline Rational limit_probability(int a, int b) {
    require(1 <= b && b < a, errc::out_of_range, "need 1 <= b < a");
    auto half_power = [](long k) {
        BigInt den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(k));
        return make_rational(1, den);
    };
    Rational sum = Rational(a + 1) * half_power(a);
    for (int t = 1; t <= b - 1; ++t)
        sum += Rational(f_two_row(a - 1, t)) * Rational(a - t + 1) * half_power(a + t);
    return sum;
}

// f^{(l1,l2)/(m)} / f^{(l1,l2)}, with the numerator in closed form from the
// two-by-two determinant:
//   m >= l2:  (l1+l2-m)! / ((l1-m)! l2!)
//   m <  l2:  (l1+l2-m)! ( 1/((l1-m)! l2!) - 1/((l1+1)! (l2-m-1)!) )
inline Rational skew_ratio_two_row(long l1, long l2, long m) {
    require(l2 <= l1 && 0 <= m && m <= l1, errc::invalid_shape,
            "need 0 <= m <= l1 and l2 <= l1");
    Rational numerator;
    if (m >= l2) {
        numerator = make_rational(factorial(l1 + l2 - m), factorial(l1 - m) * factorial(l2));
    } else {
        Rational inner = make_rational(1, factorial(l1 - m) * factorial(l2)) -
                         make_rational(1, factorial(l1 + 1) * factorial(l2 - m - 1));
        numerator = Rational(factorial(l1 + l2 - m)) * inner;
    }
    return numerator / Rational(f_two_row(l1, l2));
}

// f^{(l1-k,l2-k)} / f^{(l1,l2)} for k full columns removed:
//   (l1+l2-2k)!/(l1+l2)! * (l1+1)! l2! / ((l1+1-k)! (l2-k)!)
inline Rational reduced_shape_ratio(long l1, long l2, long k) {
    require(0 <= k && k <= l2 && l2 <= l1, errc::invalid_shape,
            "need 0 <= k <= l2 <= l1");
    Rational r = make_rational(factorial(l1 + l2 - 2 * k), factorial(l1 + l2));
    r *= make_rational(factorial(l1 + 1) * factorial(l2),
                       factorial(l1 + 1 - k) * factorial(l2 - k));
    return r;
}

// Lower-triangular matrix of P(P_(a-1+i, a-1+j); (1,a) < (2,b)), both row
// lengths starting at a; zero above the diagonal.
inline std::vector<std::vector<Rational>> probability_matrix(int a, int b, int size) {
    require(1 <= b && b < a, errc::out_of_range, "need 1 <= b < a");
    require(size >= 1, errc::out_of_range, "need size >= 1");
    std::vector<std::vector<Rational>> m(size, std::vector<Rational>(size, Rational(0)));
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= i; ++j) {
            TwoRowCase c = TwoRowCase::make(a - 1 + i, a - 1 + j, {1, a}, {2, b});
            m[i - 1][j - 1] = probability_two_row(c);
        }
    return m;
}

}  // namespace posetprob
