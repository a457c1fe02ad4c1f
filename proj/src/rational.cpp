#include "semicert/rational.hpp"

namespace semicert {

Rational parse_rational(const std::string& text) {
    size_t begin = text.find_first_not_of(" \t");
    size_t end = text.find_last_not_of(" \t");
    if (begin == std::string::npos) throw std::invalid_argument("empty rational literal");
    std::string body = text.substr(begin, end - begin + 1);
    Rational q;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("bad rational literal: " + text);
    if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational pow_rational(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational acc = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= acc;
        e >>= 1u;
        if (e) acc *= acc;
    }
    return result;
}

Integer pow_integer(const Integer& base, unsigned exponent) {
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Integer factorial(unsigned n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer floor_to_integer(const Rational& q) {
    Integer result;
    mpz_fdiv_q(result.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return result;
}

Rational round_to_denominator(const Rational& q, const Integer& den) {
    if (den <= 0) throw std::domain_error("round_to_denominator: nonpositive denominator");
    Rational scaled = q * Rational(den) + Rational(1, 2);
    return make_rational(floor_to_integer(scaled), den);
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace semicert
