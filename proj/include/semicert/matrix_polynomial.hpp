#pragma once

#include <functional>
#include <string>
#include <vector>

#include "semicert/polynomial.hpp"
#include "semicert/rational_matrix.hpp"

namespace semicert {

// Matrix with Polynomial entries (shared variable count). Square for targets
// like A(x), M_lambda; rectangular for square factors U in certificates.
class MatrixPolynomial {
  public:
    MatrixPolynomial() : rows_(0), cols_(0), nvars_(1) {}
    MatrixPolynomial(unsigned rows, unsigned cols, unsigned nvars)
        : rows_(rows), cols_(cols), nvars_(nvars),
          entries_(static_cast<size_t>(rows) * cols, Polynomial(nvars)) {}

    static MatrixPolynomial identity(unsigned n, unsigned nvars);
    static MatrixPolynomial from_constant(const RationalMatrix& c, unsigned nvars);
    static MatrixPolynomial from_rows(const std::vector<std::vector<Polynomial>>& rows);
    // Parses a row-major grid of polynomial strings.
    static MatrixPolynomial parse(const std::vector<std::vector<std::string>>& rows,
                                  const std::vector<std::string>& var_names);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    unsigned size() const { return rows_; }  // for square use
    unsigned nvars() const { return nvars_; }

    Polynomial& at(unsigned i, unsigned j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Polynomial& at(unsigned i, unsigned j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_diagonal() const;
    bool is_constant() const;
    // Every entry a form of type (nvars, d).
    bool is_homogeneous(unsigned d) const;
    // Max degree over entries; -1 for the zero matrix.
    int degree() const;

    MatrixPolynomial transpose() const;
    MatrixPolynomial operator+(const MatrixPolynomial& other) const;
    MatrixPolynomial operator-(const MatrixPolynomial& other) const;
    MatrixPolynomial operator*(const MatrixPolynomial& other) const;
    MatrixPolynomial operator*(const Polynomial& p) const;
    MatrixPolynomial operator*(const Rational& c) const;
    bool operator==(const MatrixPolynomial& other) const = default;

    RationalMatrix evaluate(const std::vector<Rational>& point) const;
    MatrixPolynomial map_entries(const std::function<Polynomial(const Polynomial&)>& f) const;

  private:
    unsigned rows_, cols_, nvars_;
    std::vector<Polynomial> entries_;
};

MatrixPolynomial operator*(const Polynomial& p, const MatrixPolynomial& m);

// Biform f_A(x, y) = sum_ij a_ij(x) y_i y_j living in n + m variables
// (x block first). Bidegree is checked, not assumed.
struct Biform {
    Polynomial poly;   // in n + m variables
    unsigned nx = 0;   // leading x block size
    unsigned ny = 0;
    unsigned x_degree = 0;
    unsigned y_degree = 2;
};

// Requires A symmetric; A homogeneous of degree d gives type (n, d; m, 2).
Biform to_biform(const MatrixPolynomial& a);

// Exact determinant via fraction-free Bareiss elimination over the
// polynomial ring (row swaps for zero pivots).
Polynomial determinant(const MatrixPolynomial& a);

// Determinant of the S x S principal submatrix (0-based indices).
Polynomial principal_minor(const MatrixPolynomial& a, const std::vector<unsigned>& subset);

// For tall A (s x m, s >= m): det(A^T A) together with det(A_S) for every
// m-subset S of rows, in lexicographic order of subsets. Cauchy-Binet gives
// det(A^T A) = sum_S det(A_S)^2, which callers may check structurally.
struct CauchyBinetExpansion {
    Polynomial gram_determinant;
    std::vector<Polynomial> row_minors;
};
CauchyBinetExpansion cauchy_binet_expand(const MatrixPolynomial& a);

std::vector<std::vector<std::string>> matrix_to_strings(const MatrixPolynomial& a,
                                                        const std::vector<std::string>& var_names);

}  // namespace semicert
