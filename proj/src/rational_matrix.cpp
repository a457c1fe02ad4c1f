#include "semicert/rational_matrix.hpp"

#include <stdexcept>

namespace semicert {

RationalMatrix RationalMatrix::identity(unsigned n) {
    RationalMatrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    unsigned r = static_cast<unsigned>(rows.size());
    unsigned c = r ? static_cast<unsigned>(rows.front().size()) : 0;
    RationalMatrix m(r, c);
    for (unsigned i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (unsigned j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool RationalMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix m(cols_, rows_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
    RationalMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + other.entries_[k];
    return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("shape mismatch");
    RationalMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - other.entries_[k];
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("shape mismatch in *");
    RationalMatrix m(rows_, other.cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            if (at(i, k) == 0) continue;
            for (unsigned j = 0; j < other.cols_; ++j) m.at(i, j) += at(i, k) * other.at(k, j);
        }
    return m;
}

RationalMatrix RationalMatrix::operator*(const Rational& c) const {
    RationalMatrix m(rows_, cols_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * c;
    return m;
}

Rational RationalMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant of non-square matrix");
    RationalMatrix a = *this;
    unsigned n = rows_;
    Rational det(1);
    for (unsigned k = 0; k < n; ++k) {
        unsigned pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != k) {
            for (unsigned j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            det = -det;
        }
        det *= a.at(k, k);
        for (unsigned i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rational factor = a.at(i, k) / a.at(k, k);
            for (unsigned j = k; j < n; ++j) a.at(i, j) -= factor * a.at(k, j);
        }
    }
    return det;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    unsigned n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (unsigned k = 0; k < n; ++k) {
        unsigned pivot = k;
        while (pivot < n && a.at(pivot, k) == 0) ++pivot;
        if (pivot == n) throw std::domain_error("inverse of singular matrix");
        if (pivot != k)
            for (unsigned j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        Rational scale = Rational(1) / a.at(k, k);
        for (unsigned j = 0; j < n; ++j) {
            a.at(k, j) *= scale;
            inv.at(k, j) *= scale;
        }
        for (unsigned i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rational factor = a.at(i, k);
            for (unsigned j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(k, j);
                inv.at(i, j) -= factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

Rational sqrt_approx(const Rational& q, unsigned bits) {
    if (q < 0) throw std::domain_error("sqrt_approx of negative rational");
    Integer scale = pow_integer(2, bits);
    Integer scaled_num = q.get_num() * scale * scale;
    Integer root;
    mpz_fdiv_q(root.get_mpz_t(), scaled_num.get_mpz_t(), q.get_den().get_mpz_t());
    mpz_sqrt(root.get_mpz_t(), root.get_mpz_t());
    return make_rational(root, scale);
}

Polynomial characteristic_polynomial(const RationalMatrix& q) {
    if (q.rows() != q.cols()) throw std::invalid_argument("char poly of non-square matrix");
    unsigned n = q.rows();
    // Faddeev-LeVerrier recurrence; stays in exact rationals.
    //   M_1 = Q, c_{n-k} = -tr(Q M_k)/k ... with M_{k+1} = Q(M_k + c_{n-k} Id)
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    RationalMatrix m = q;
    for (unsigned k = 1; k <= n; ++k) {
        Rational tr(0);
        for (unsigned i = 0; i < n; ++i) tr += m.at(i, i);
        c[n - k] = -tr / Rational(static_cast<long>(k));
        if (k == n) break;
        RationalMatrix shifted = m;
        for (unsigned i = 0; i < n; ++i) shifted.at(i, i) += c[n - k];
        m = q * shifted;
    }
    Polynomial p(1);
    for (unsigned k = 0; k <= n; ++k) p.add_term(MultiIndex{k}, c[k]);
    return p;
}

namespace {

// det(lambda*Id - Q) = sum_k c_k lambda^k with c_{n-j} = (-1)^j e_j, where
// e_j is the j-th elementary symmetric function of the (real) eigenvalues.
std::vector<Rational> elementary_symmetric(const RationalMatrix& q) {
    Polynomial chi = characteristic_polynomial(q);
    unsigned n = q.rows();
    std::vector<Rational> e(n + 1, Rational(0));
    for (unsigned j = 0; j <= n; ++j) {
        Rational c = chi.coefficient(MultiIndex{n - j});
        e[j] = (j % 2u) ? -c : c;
    }
    return e;
}

}  // namespace

bool psd_constant(const RationalMatrix& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("psd_constant: matrix not symmetric");
    for (const Rational& e : elementary_symmetric(q))
        if (e < 0) return false;
    return true;
}

bool pd_constant(const RationalMatrix& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("pd_constant: matrix not symmetric");
    auto e = elementary_symmetric(q);
    for (size_t j = 1; j < e.size(); ++j)
        if (e[j] <= 0) return false;
    return true;
}

CongruentDiagonalization congruent_diagonalize(const RationalMatrix& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("congruent_diagonalize: not symmetric");
    unsigned n = q.rows();
    RationalMatrix a = q;
    RationalMatrix l = RationalMatrix::identity(n);  // maintains L Q L^T = A
    for (unsigned k = 0; k < n; ++k) {
        if (a.at(k, k) == 0) {
            unsigned j = k + 1;
            while (j < n && a.at(k, j) == 0) ++j;
            if (j == n) continue;  // row/col k already clear
            // row_k += s*row_j and col_k += s*col_j makes the pivot
            // 2*s*a_kj + s^2*a_jj; at least one of s = 1, -1 is nonzero.
            for (int attempt = 0; attempt < 2; ++attempt) {
                Rational sign = attempt == 0 ? Rational(1) : Rational(-2);
                for (unsigned c = 0; c < n; ++c) a.at(k, c) += sign * a.at(j, c);
                for (unsigned r = 0; r < n; ++r) a.at(r, k) += sign * a.at(r, j);
                for (unsigned c = 0; c < n; ++c) l.at(k, c) += sign * l.at(j, c);
                if (a.at(k, k) != 0) break;
            }
            if (a.at(k, k) == 0) continue;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            if (a.at(i, k) == 0) continue;
            Rational factor = a.at(i, k) / a.at(k, k);
            for (unsigned c = 0; c < n; ++c) a.at(i, c) -= factor * a.at(k, c);
            for (unsigned r = 0; r < n; ++r) a.at(r, i) -= factor * a.at(r, k);
            for (unsigned c = 0; c < n; ++c) l.at(i, c) -= factor * l.at(k, c);
        }
    }
    CongruentDiagonalization out;
    out.diag.resize(n);
    for (unsigned i = 0; i < n; ++i) out.diag[i] = a.at(i, i);
    out.s = l;  // L Q L^T = diag
    return out;
}

std::optional<std::vector<Rational>> psd_violation_witness(const RationalMatrix& q) {
    auto cd = congruent_diagonalize(q);
    unsigned n = q.rows();
    for (unsigned k = 0; k < n; ++k) {
        if (cd.diag[k] < 0) {
            // v = row k of L satisfies v^T Q v = diag_k < 0
            std::vector<Rational> v(n);
            for (unsigned j = 0; j < n; ++j) v[j] = cd.s.at(k, j);
            return v;
        }
    }
    return std::nullopt;
}

bool psd_by_principal_minors(const RationalMatrix& q) {
    if (!q.is_symmetric()) throw std::invalid_argument("not symmetric");
    unsigned n = q.rows();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        RationalMatrix sub(static_cast<unsigned>(idx.size()), static_cast<unsigned>(idx.size()));
        for (unsigned i = 0; i < idx.size(); ++i)
            for (unsigned j = 0; j < idx.size(); ++j) sub.at(i, j) = q.at(idx[i], idx[j]);
        if (sub.determinant() < 0) return false;
    }
    return true;
}

Rational pd_diagonal_margin(const RationalMatrix& q) {
    if (!pd_constant(q)) throw std::invalid_argument("pd_diagonal_margin: matrix not pd");
    unsigned n = q.rows();
    Rational tr(0);
    for (unsigned i = 0; i < n; ++i) tr += q.at(i, i);
    Rational mu = tr / Rational(static_cast<long>(n));
    for (int it = 0; it < 512; ++it) {
        RationalMatrix shifted = q;
        for (unsigned i = 0; i < n; ++i) shifted.at(i, i) -= mu;
        if (psd_constant(shifted)) return mu;
        mu /= 2;
    }
    throw std::runtime_error("pd_diagonal_margin: halving search exhausted");
}

}  // namespace semicert
