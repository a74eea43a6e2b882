#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bridgelab {

// All mass arithmetic is exact. Floating point appears only where a bound
// is genuinely irrational (Poisson tails, e^-a reference constants).
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational rational_pow(const Rational& base, unsigned long exp) {
    if (exp == 0) return Rational(1);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    out.canonicalize();
    return out;
}

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

// Accepts "P", "P/Q" and decimal-free signs; used for --lambda etc.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return q;
}

// Canonical "P/Q" (or "P" when integral) used in every JSON report.
inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline double rational_double(const Rational& q) { return q.get_d(); }

}  // namespace bridgelab
