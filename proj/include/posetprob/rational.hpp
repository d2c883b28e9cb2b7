#pragma once

#include <gmpxx.h>

#include <cstdio>
#include <string>
#include <string_view>

#include "posetprob/error.hpp"

namespace posetprob {

// All counts are exact big integers, all probabilities exact rationals in
// lowest terms. GMP does the heavy lifting; mpq_class canonicalizes on
// construction from two integers via make_rational below.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// C_n = binom(2n, n)/(n+1)
inline BigInt catalan(long n) {
    BigInt r = binomial(2 * n, n);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return r;
}

inline std::string to_string(const BigInt& n) { return n.get_str(); }

// Lowest-terms "p/q", integers printed without the denominator.
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rational parse_rational(std::string_view s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            BigInt n(std::string(s), 10);
            return Rational(n);
        }
        BigInt num(std::string(s.substr(0, slash)), 10);
        BigInt den(std::string(s.substr(slash + 1)), 10);
        require(den != 0, errc::parse_error, "zero denominator in '" + std::string(s) + "'");
        return make_rational(num, den);
    } catch (const std::invalid_argument&) {
        raise(errc::parse_error, "bad rational '" + std::string(s) + "'");
    }
}

inline std::string to_decimal(const Rational& q, int significant = 15) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", significant, q.get_d());
    return buf;
}

}  // namespace posetprob
