#include "semicert/matrix_polynomial.hpp"

#include <functional>
#include <stdexcept>

namespace semicert {

MatrixPolynomial MatrixPolynomial::identity(unsigned n, unsigned nvars) {
    MatrixPolynomial m(n, n, nvars);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = Polynomial::constant(nvars, Rational(1));
    return m;
}

MatrixPolynomial MatrixPolynomial::from_constant(const RationalMatrix& c, unsigned nvars) {
    MatrixPolynomial m(c.rows(), c.cols(), nvars);
    for (unsigned i = 0; i < c.rows(); ++i)
        for (unsigned j = 0; j < c.cols(); ++j)
            if (c.at(i, j) != 0) m.at(i, j) = Polynomial::constant(nvars, c.at(i, j));
    return m;
}

MatrixPolynomial MatrixPolynomial::from_rows(const std::vector<std::vector<Polynomial>>& rows) {
    unsigned r = static_cast<unsigned>(rows.size());
    if (r == 0) throw std::invalid_argument("empty matrix");
    unsigned c = static_cast<unsigned>(rows.front().size());
    unsigned nv = rows.front().front().nvars();
    MatrixPolynomial m(r, c, nv);
    for (unsigned i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
        for (unsigned j = 0; j < c; ++j) {
            if (rows[i][j].nvars() != nv) throw std::invalid_argument("entry nvars mismatch");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

MatrixPolynomial MatrixPolynomial::parse(const std::vector<std::vector<std::string>>& rows,
                                         const std::vector<std::string>& var_names) {
    std::vector<std::vector<Polynomial>> parsed;
    for (const auto& row : rows) {
        std::vector<Polynomial> prow;
        for (const auto& s : row) prow.push_back(parse_polynomial(s, var_names));
        parsed.push_back(std::move(prow));
    }
    return from_rows(parsed);
}

bool MatrixPolynomial::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool MatrixPolynomial::is_symmetric() const {
    if (!is_square()) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool MatrixPolynomial::is_diagonal() const {
    if (!is_square()) return false;
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool MatrixPolynomial::is_constant() const {
    for (const auto& e : entries_)
        if (e.degree() > 0) return false;
    return true;
}

bool MatrixPolynomial::is_homogeneous(unsigned d) const {
    for (const auto& e : entries_)
        if (!e.is_homogeneous(d)) return false;
    return true;
}

int MatrixPolynomial::degree() const {
    int d = -1;
    for (const auto& e : entries_) d = std::max(d, e.degree());
    return d;
}

MatrixPolynomial MatrixPolynomial::transpose() const {
    MatrixPolynomial m(cols_, rows_, nvars_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

MatrixPolynomial MatrixPolynomial::operator+(const MatrixPolynomial& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || nvars_ != other.nvars_)
        throw std::invalid_argument("matrix shape/nvars mismatch in +");
    MatrixPolynomial m(rows_, cols_, nvars_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] + other.entries_[k];
    return m;
}

MatrixPolynomial MatrixPolynomial::operator-(const MatrixPolynomial& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_ || nvars_ != other.nvars_)
        throw std::invalid_argument("matrix shape/nvars mismatch in -");
    MatrixPolynomial m(rows_, cols_, nvars_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] - other.entries_[k];
    return m;
}

MatrixPolynomial MatrixPolynomial::operator*(const MatrixPolynomial& other) const {
    if (cols_ != other.rows_ || nvars_ != other.nvars_)
        throw std::invalid_argument("matrix shape/nvars mismatch in *");
    MatrixPolynomial m(rows_, other.cols_, nvars_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (unsigned j = 0; j < other.cols_; ++j)
                m.at(i, j) += at(i, k) * other.at(k, j);
        }
    return m;
}

MatrixPolynomial MatrixPolynomial::operator*(const Polynomial& p) const {
    MatrixPolynomial m(rows_, cols_, nvars_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * p;
    return m;
}

MatrixPolynomial MatrixPolynomial::operator*(const Rational& c) const {
    MatrixPolynomial m(rows_, cols_, nvars_);
    for (size_t k = 0; k < entries_.size(); ++k) m.entries_[k] = entries_[k] * c;
    return m;
}

MatrixPolynomial operator*(const Polynomial& p, const MatrixPolynomial& m) { return m * p; }

RationalMatrix MatrixPolynomial::evaluate(const std::vector<Rational>& point) const {
    RationalMatrix m(rows_, cols_);
    for (unsigned i = 0; i < rows_; ++i)
        for (unsigned j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

MatrixPolynomial MatrixPolynomial::map_entries(
    const std::function<Polynomial(const Polynomial&)>& f) const {
    std::vector<std::vector<Polynomial>> rows;
    for (unsigned i = 0; i < rows_; ++i) {
        std::vector<Polynomial> row;
        for (unsigned j = 0; j < cols_; ++j) row.push_back(f(at(i, j)));
        rows.push_back(std::move(row));
    }
    return MatrixPolynomial::from_rows(rows);
}

Biform to_biform(const MatrixPolynomial& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("to_biform: matrix not symmetric");
    unsigned n = a.nvars();
    unsigned m = a.size();
    Biform out;
    out.nx = n;
    out.ny = m;
    out.x_degree = static_cast<unsigned>(std::max(a.degree(), 0));
    out.y_degree = 2;
    Polynomial acc(n + m);
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = 0; j < m; ++j) {
            for (const auto& [e, c] : a.at(i, j).terms()) {
                MultiIndex ext(e.begin(), e.end());
                ext.resize(n + m, 0);
                ext[n + i] += 1;
                ext[n + j] += 1;
                acc.add_term(ext, c);
            }
        }
    }
    out.poly = acc;
    return out;
}

Polynomial determinant(const MatrixPolynomial& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    unsigned n = a.size();
    if (n == 0) return Polynomial::constant(a.nvars(), Rational(1));
    MatrixPolynomial w = a;
    Rational sign(1);
    Polynomial prev_pivot = Polynomial::constant(a.nvars(), Rational(1));
    for (unsigned k = 0; k + 1 < n; ++k) {
        if (w.at(k, k).is_zero()) {
            unsigned p = k + 1;
            while (p < n && w.at(p, k).is_zero()) ++p;
            if (p == n) return Polynomial(a.nvars());  // zero column -> det 0
            for (unsigned j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (unsigned i = k + 1; i < n; ++i) {
            for (unsigned j = k + 1; j < n; ++j) {
                Polynomial num = w.at(k, k) * w.at(i, j) - w.at(i, k) * w.at(k, j);
                auto q = try_divide_exact(num, prev_pivot);
                if (!q) throw std::logic_error("Bareiss division not exact");
                w.at(i, j) = *q;
            }
            w.at(i, k) = Polynomial(a.nvars());
        }
        prev_pivot = w.at(k, k);
    }
    return w.at(n - 1, n - 1) * sign;
}

Polynomial principal_minor(const MatrixPolynomial& a, const std::vector<unsigned>& subset) {
    if (!a.is_square()) throw std::invalid_argument("principal_minor: non-square matrix");
    if (subset.empty()) throw std::invalid_argument("principal_minor: empty subset");
    MatrixPolynomial sub(static_cast<unsigned>(subset.size()), static_cast<unsigned>(subset.size()),
                         a.nvars());
    for (unsigned i = 0; i < subset.size(); ++i) {
        for (unsigned j = 0; j < subset.size(); ++j) {
            if (subset[i] >= a.size() || subset[j] >= a.size())
                throw std::invalid_argument("principal_minor: index out of range");
            sub.at(i, j) = a.at(subset[i], subset[j]);
        }
    }
    return determinant(sub);
}

CauchyBinetExpansion cauchy_binet_expand(const MatrixPolynomial& a) {
    unsigned s = a.rows(), m = a.cols();
    if (s < m) throw std::invalid_argument("cauchy_binet_expand: need rows >= cols");
    CauchyBinetExpansion out;
    out.gram_determinant = determinant(a.transpose() * a);
    // m-subsets of {0..s-1} in lexicographic order
    std::vector<unsigned> idx(m);
    for (unsigned i = 0; i < m; ++i) idx[i] = i;
    while (true) {
        MatrixPolynomial sub(m, m, a.nvars());
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) sub.at(i, j) = a.at(idx[i], j);
        out.row_minors.push_back(determinant(sub));
        // advance combination
        int pos = static_cast<int>(m) - 1;
        while (pos >= 0 && idx[pos] == s - m + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (unsigned i = pos + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

std::vector<std::vector<std::string>> matrix_to_strings(const MatrixPolynomial& a,
                                                        const std::vector<std::string>& var_names) {
    std::vector<std::vector<std::string>> rows;
    for (unsigned i = 0; i < a.rows(); ++i) {
        std::vector<std::string> row;
        for (unsigned j = 0; j < a.cols(); ++j) row.push_back(to_string(a.at(i, j), var_names));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace semicert
