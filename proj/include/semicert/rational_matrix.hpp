#pragma once

#include <optional>
#include <vector>

#include "semicert/polynomial.hpp"
#include "semicert/rational.hpp"

namespace semicert {

// Dense matrix of rationals; all decisions below are exact.
class RationalMatrix {
  public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(unsigned rows, unsigned cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, Rational(0)) {}

    static RationalMatrix identity(unsigned n);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    unsigned rows() const { return rows_; }
    unsigned cols() const { return cols_; }
    Rational& at(unsigned i, unsigned j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(unsigned i, unsigned j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    bool is_symmetric() const;
    RationalMatrix transpose() const;
    RationalMatrix operator+(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator*(const Rational& c) const;
    bool operator==(const RationalMatrix& other) const = default;

    Rational determinant() const;  // fraction-free not needed over a field
    RationalMatrix inverse() const;  // throws for singular input

  private:
    unsigned rows_, cols_;
    std::vector<Rational> entries_;
};

inline RationalMatrix operator*(const Rational& c, const RationalMatrix& m) { return m * c; }

// Characteristic polynomial det(lambda*Id - Q) as a univariate polynomial.
Polynomial characteristic_polynomial(const RationalMatrix& q);

// Exact psd decision by the coefficient-sign rule on the characteristic
// polynomial: Q psd iff every elementary symmetric function of the
// eigenvalues is >= 0 (all eigenvalues of a symmetric matrix are real).
bool psd_constant(const RationalMatrix& q);
// Strict variant: all elementary symmetric functions > 0.
bool pd_constant(const RationalMatrix& q);

// A vector v with v^T Q v < 0 when Q is not psd.
std::optional<std::vector<Rational>> psd_violation_witness(const RationalMatrix& q);

// Congruence diagonalization S Q S^T = diag(d) with S invertible; works for
// any symmetric rational Q (no square roots needed).
struct CongruentDiagonalization {
    RationalMatrix s;  // invertible; S Q S^T is diagonal
    std::vector<Rational> diag;
};
CongruentDiagonalization congruent_diagonalize(const RationalMatrix& q);

// All 2^m - 1 principal minors are >= 0: brute-force psd oracle for tests.
bool psd_by_principal_minors(const RationalMatrix& q);

// Largest mu with Q - mu*Id still psd is irrational in general; this returns
// some positive rational below it (halving search). Requires Q pd.
Rational pd_diagonal_margin(const RationalMatrix& q);

// floor(sqrt(q)) to `bits` fractional binary digits; q >= 0.
Rational sqrt_approx(const Rational& q, unsigned bits);

}  // namespace semicert
