#pragma once

#include <cstdint>
#include <vector>

#include "semicert/rational.hpp"

namespace semicert {

// Exponent vector of a monomial. std::vector comparison is lexicographic,
// which is the canonical term order everywhere in this library.
using MultiIndex = std::vector<uint32_t>;

inline unsigned total_degree(const MultiIndex& a) {
    unsigned d = 0;
    for (uint32_t e : a) d += e;
    return d;
}

// Componentwise partial order (the order under which Gamma sets are minimal
// and Taylor corrections X^(alpha-beta) stay monomials).
inline bool divides(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline MultiIndex subtract(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline bool all_even(const MultiIndex& a) {
    for (uint32_t e : a)
        if (e % 2u) return false;
    return true;
}

// alpha! = prod_i alpha_i!
inline Integer multi_factorial(const MultiIndex& a) {
    Integer f(1);
    for (uint32_t e : a) f *= factorial(e);
    return f;
}

// All multi-indices of length nvars with total degree <= max_degree,
// in lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(unsigned nvars, unsigned max_degree);

}  // namespace semicert
