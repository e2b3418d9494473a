#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chromaposet {

// Exact arithmetic everywhere in the core: positivity questions are sign
// questions, so no floating point is permitted.
using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(int n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer pow2(int n) {
    Integer r = 1;
    r <<= n;
    return r;
}

// Canonical form: lowest terms, sign on the numerator, "a" or "a/b".
inline std::string to_string(const Rational& q) {
    return q.get_str();
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0) {
        throw std::invalid_argument("invalid rational literal: " + text);
    }
    q.canonicalize();
    return q;
}

}  // namespace chromaposet
