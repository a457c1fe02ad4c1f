#pragma once

#include "semicert/matrix_polynomial.hpp"

namespace semicert {

// M = E * D * F over Q[t] with E, F unimodular (constant nonzero
// determinant), D diagonal with monic entries and d_i | d_{i+1}; zero
// entries are sorted to the end.
struct SmithDecomposition {
    MatrixPolynomial e;
    MatrixPolynomial d;
    MatrixPolynomial f;
    std::vector<Polynomial> diagonal() const;
};

SmithDecomposition smith_normal_form(const MatrixPolynomial& m);

// The increasing index sequence 1 = k_0 < k_1 < ... of positions where the
// t-adic valuation of the diagonal jumps, i.e. (d_j / d_{j-1})(0) = 0.
// Indices are 1-based to match the block bookkeeping of the 0+ certificate.
// Requires every d_i nonzero with positive lowest-order coefficient.
std::vector<unsigned> block_sequence(const std::vector<Polynomial>& diag);

// adj(F)/det(F); requires det(F) to be a nonzero constant.
MatrixPolynomial unimodular_inverse(const MatrixPolynomial& f);

}  // namespace semicert
