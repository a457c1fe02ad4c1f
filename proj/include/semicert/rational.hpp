#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semicert {

// Exact arithmetic everywhere: arbitrary-precision integers and canonical
// rationals (gcd(num, den) = 1, den >= 1) backed by GMP.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when den == 1, else "p/q".
std::string to_string(const Rational& q);

inline int sign(const Rational& q) { return sgn(q); }
inline Rational abs_value(const Rational& q) { return abs(q); }

Rational pow_rational(const Rational& base, unsigned exponent);
Integer pow_integer(const Integer& base, unsigned exponent);
Integer factorial(unsigned n);

// Nearest rational with denominator `den` (ties toward +infinity).
Rational round_to_denominator(const Rational& q, const Integer& den);

// floor(q) as an integer.
Integer floor_to_integer(const Rational& q);

double to_double(const Rational& q);

}  // namespace semicert
