/*
 * rational.hpp
 * ------------
 * Exact scalar types for the whole library: arbitrary-precision integers
 * and rationals, backed by GMP. Rationals are always kept in lowest terms
 * with a positive denominator (mpq canonical form), so equality is plain
 * comparison.
 */
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace effjet {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r;
}

// Parses a decimal integer string, rejecting anything else.
inline BigInt bigint_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty integer string");
    BigInt z;
    if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad integer string: " + s);
    return z;
}

inline Rational rational_from_strings(const std::string& num, const std::string& den) {
    BigInt n = bigint_from_string(num);
    BigInt d = bigint_from_string(den);
    if (sgn(d) == 0) throw std::invalid_argument("zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline std::string num_string(const Rational& q) { return q.get_num().get_str(); }
inline std::string den_string(const Rational& q) { return q.get_den().get_str(); }

inline int ceil_div_int(int a, int b) { return (a + b - 1) / b; }

}  // namespace effjet
