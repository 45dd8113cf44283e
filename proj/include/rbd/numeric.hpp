#pragma once

// Exact integer and rational arithmetic used throughout the toolkit.
// All domain quantities are arbitrary precision (GMP); machine ints are
// reserved for indices and sizes.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rbd {

using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline bool is_odd(const Int& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }
inline bool is_even(const Int& a) { return mpz_even_p(a.get_mpz_t()) != 0; }

inline bool divisible(const Int& a, const Int& d) {
    if (sgn(d) == 0) return sgn(a) == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Quotient of an exact division; throws if d does not divide a.
inline Int exact_div(const Int& a, const Int& d) {
    if (!divisible(a, d)) throw std::invalid_argument("exact_div: not divisible");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Truncated quotient (rounds toward zero, like C integer division).
inline Int tdiv(const Int& a, const Int& d) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    return q;
}

/// Euclidean remainder in [0, |m|).
inline Int mod_euclid(const Int& a, const Int& m) {
    if (sgn(m) == 0) throw std::invalid_argument("mod_euclid: zero modulus");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// Inverse of a modulo m, in [0, |m|); throws if gcd(a, m) != 1.
inline Int inverse_mod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::invalid_argument("inverse_mod: not invertible");
    return r;
}

/// Floor of the square root of a nonnegative integer.
inline Int isqrt(const Int& a) {
    if (sgn(a) < 0) throw std::invalid_argument("isqrt: negative argument");
    Int r;
    mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline bool is_perfect_square(const Int& a) {
    return sgn(a) >= 0 && mpz_perfect_square_p(a.get_mpz_t()) != 0;
}

/// Checked conversion for quantities that must fit a machine integer.
inline long to_long(const Int& a) {
    if (!a.fits_slong_p()) throw std::overflow_error("to_long: value out of range");
    return a.get_si();
}

inline std::string to_string(const Int& a) { return a.get_str(); }

/// Rationals print as "n" or "n/d"; parsing accepts the same forms.
inline std::string to_string(const Rat& a) {
    if (a.get_den() == 1) return a.get_num().get_str();
    return a.get_num().get_str() + "/" + a.get_den().get_str();
}

inline Int parse_int(const std::string& s) {
    Int r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_int: bad integer '" + s + "'");
    return r;
}

inline Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad rational '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace rbd
