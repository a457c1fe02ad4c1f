#pragma once

#include <optional>
#include <vector>

#include "semicert/polynomial.hpp"

namespace semicert {

// Signed-remainder (Sturm) machinery for exact real-root counting and
// isolation of univariate rational polynomials.

struct SturmSequence {
    std::vector<Polynomial> chain;
    int variations_at(const Rational& x) const;
    int variations_at_plus_infinity() const;
    int variations_at_minus_infinity() const;
};

SturmSequence sturm_sequence(const Polynomial& p);

// Number of distinct real roots in (a, b]; requires p(a), p(b) != 0 when
// counting against finite endpoints of the squarefree part.
int count_real_roots(const Polynomial& p, const Rational& a, const Rational& b);
int count_real_roots(const Polynomial& p);  // on all of R

// 1 + max |a_i / a_n|: every real root lies in (-bound, bound).
Rational cauchy_root_bound(const Polynomial& p);

struct RootInterval {
    Rational lo, hi;  // half-open (lo, hi], contains exactly one root
};

// Isolating intervals of width <= width for all distinct real roots of p
// (computed on the squarefree part), sorted increasingly.
std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width);

// Exact decision: p(t) >= 0 for all real t. Zero polynomial counts as psd.
bool psd_univariate_scalar(const Polynomial& p);

// For p not psd: an explicit rational t with p(t) < 0.
std::optional<Rational> negative_value_witness(const Polynomial& p);

}  // namespace semicert
