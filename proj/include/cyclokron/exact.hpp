#pragma once

// Exact arithmetic foundations: unbounded signed integers and reduced
// fractions on top of GNU MP. Everything downstream (polynomials,
// determinants, residues) is built from these, so no operation in the
// library ever rounds.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclokron {

using ExactInt = mpz_class;
using Rational = mpq_class;

// base^exp, exact.
inline ExactInt pow_exact(const ExactInt& base, unsigned long exp) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline ExactInt gcd_exact(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline ExactInt lcm_exact(const ExactInt& a, const ExactInt& b) {
    ExactInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline ExactInt abs_exact(const ExactInt& a) { return a < 0 ? ExactInt(-a) : a; }

// Canonical rational: reduced, positive denominator. mpq_class does not
// canonicalize on construction, so all rationals enter through here.
inline Rational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace cyclokron
