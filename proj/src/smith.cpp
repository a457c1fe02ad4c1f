#include "semicert/smith.hpp"

#include <stdexcept>

namespace semicert {

std::vector<Polynomial> SmithDecomposition::diagonal() const {
    std::vector<Polynomial> out;
    for (unsigned i = 0; i < d.size(); ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

unsigned udeg(const Polynomial& p) { return p.is_zero() ? 0u : p.terms().rbegin()->first[0]; }

struct Worker {
    MatrixPolynomial e, d, f;  // invariant: input = e * d * f
    unsigned n;

    explicit Worker(const MatrixPolynomial& m)
        : e(MatrixPolynomial::identity(m.size(), 1)),
          d(m),
          f(MatrixPolynomial::identity(m.size(), 1)),
          n(m.size()) {}

    // D <- R(i<->j) D   compensated by E <- E R(i<->j)
    void swap_rows(unsigned i, unsigned j) {
        if (i == j) return;
        for (unsigned c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
        for (unsigned r = 0; r < n; ++r) std::swap(e.at(r, i), e.at(r, j));
    }

    void swap_cols(unsigned i, unsigned j) {
        if (i == j) return;
        for (unsigned r = 0; r < n; ++r) std::swap(d.at(r, i), d.at(r, j));
        for (unsigned c = 0; c < n; ++c) std::swap(f.at(i, c), f.at(j, c));
    }

    // row_i -= q * row_t on D; E gains the inverse: col_t += q * col_i
    void row_op(unsigned i, unsigned t, const Polynomial& q) {
        for (unsigned c = 0; c < n; ++c) d.at(i, c) -= q * d.at(t, c);
        for (unsigned r = 0; r < n; ++r) e.at(r, t) += e.at(r, i) * q;
    }

    // col_j -= q * col_t on D; F gains: row_t += q * row_j
    void col_op(unsigned j, unsigned t, const Polynomial& q) {
        for (unsigned r = 0; r < n; ++r) d.at(r, j) -= d.at(r, t) * q;
        for (unsigned c = 0; c < n; ++c) f.at(t, c) += q * f.at(j, c);
    }

    // scale row i of D by 1/c; E column i scales by c
    void scale_row(unsigned i, const Rational& c) {
        Rational inv = Rational(1) / c;
        for (unsigned col = 0; col < n; ++col) d.at(i, col) = d.at(i, col) * inv;
        for (unsigned r = 0; r < n; ++r) e.at(r, i) = e.at(r, i) * c;
    }

    bool find_pivot(unsigned t, unsigned& pi, unsigned& pj) const {
        bool found = false;
        unsigned best = 0;
        for (unsigned i = t; i < n; ++i)
            for (unsigned j = t; j < n; ++j) {
                if (d.at(i, j).is_zero()) continue;
                unsigned deg = udeg(d.at(i, j));
                if (!found || deg < best) {
                    found = true;
                    best = deg;
                    pi = i;
                    pj = j;
                }
            }
        return found;
    }

    void reduce_corner(unsigned t) {
        for (int guard = 0; guard < 100000; ++guard) {
            unsigned pi = t, pj = t;
            if (!find_pivot(t, pi, pj)) return;
            swap_rows(t, pi);
            swap_cols(t, pj);
            bool clean = true;
            for (unsigned i = t + 1; i < n; ++i) {
                if (d.at(i, t).is_zero()) continue;
                auto dm = divide_univariate(d.at(i, t), d.at(t, t));
                row_op(i, t, dm.quotient);
                if (!d.at(i, t).is_zero()) clean = false;  // remainder stays, repeat
            }
            for (unsigned j = t + 1; j < n; ++j) {
                if (d.at(t, j).is_zero()) continue;
                auto dm = divide_univariate(d.at(t, j), d.at(t, t));
                col_op(j, t, dm.quotient);
                if (!d.at(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest of the block for the chain to hold
            bool divides_all = true;
            for (unsigned i = t + 1; i < n && divides_all; ++i)
                for (unsigned j = t + 1; j < n && divides_all; ++j) {
                    if (d.at(i, j).is_zero()) continue;
                    if (!divide_univariate(d.at(i, j), d.at(t, t)).remainder.is_zero()) {
                        // fold row i into row t and restart the corner
                        row_op(t, i, -Polynomial::constant(1, Rational(1)));
                        divides_all = false;
                    }
                }
            if (divides_all) return;
        }
        throw std::logic_error("smith_normal_form: corner reduction did not terminate");
    }

    void run() {
        for (unsigned t = 0; t < n; ++t) reduce_corner(t);
        // monic normalization
        for (unsigned i = 0; i < n; ++i) {
            const Polynomial& di = d.at(i, i);
            if (!di.is_zero() && di.leading_coefficient() != 1)
                scale_row(i, di.leading_coefficient());
        }
        // zeros to the end (paired swaps keep D diagonal)
        for (unsigned i = 0; i < n; ++i) {
            if (!d.at(i, i).is_zero()) continue;
            for (unsigned j = i + 1; j < n; ++j) {
                if (!d.at(j, j).is_zero()) {
                    swap_rows(i, j);
                    swap_cols(i, j);
                    break;
                }
            }
        }
    }
};

}  // namespace

SmithDecomposition smith_normal_form(const MatrixPolynomial& m) {
    if (!m.is_square()) throw std::invalid_argument("smith_normal_form: non-square matrix");
    if (m.nvars() != 1) throw std::invalid_argument("smith_normal_form: univariate matrices only");
    Worker w(m);
    w.run();
    return SmithDecomposition{w.e, w.d, w.f};
}

std::vector<unsigned> block_sequence(const std::vector<Polynomial>& diag) {
    if (diag.empty()) throw std::invalid_argument("block_sequence: empty diagonal");
    std::vector<unsigned> valuations;
    for (const Polynomial& d : diag) {
        if (d.is_zero())
            throw std::invalid_argument("block_sequence: zero diagonal entry (recurse on the smaller block)");
        // t-adic valuation and sign of the trailing coefficient
        unsigned val = d.terms().begin()->first[0];
        if (d.terms().begin()->second <= 0)
            throw std::invalid_argument("block_sequence: diagonal entry negative near 0+");
        valuations.push_back(val);
    }
    std::vector<unsigned> ks = {1};
    for (size_t j = 1; j < valuations.size(); ++j) {
        if (valuations[j] < valuations[j - 1])
            throw std::invalid_argument("block_sequence: valuations not increasing (divisibility broken)");
        if (valuations[j] > valuations[j - 1]) ks.push_back(static_cast<unsigned>(j + 1));
    }
    return ks;
}

MatrixPolynomial unimodular_inverse(const MatrixPolynomial& f) {
    if (!f.is_square()) throw std::invalid_argument("unimodular_inverse: non-square");
    Polynomial det = determinant(f);
    if (det.is_zero() || det.degree() != 0)
        throw std::invalid_argument("unimodular_inverse: determinant is not a nonzero constant");
    Rational dc = det.constant_term();
    unsigned n = f.size();
    MatrixPolynomial adj(n, n, f.nvars());
    if (n == 1) {
        adj.at(0, 0) = Polynomial::constant(f.nvars(), Rational(1) / dc);
        return adj;
    }
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
            MatrixPolynomial minor(n - 1, n - 1, f.nvars());
            for (unsigned r = 0, rr = 0; r < n; ++r) {
                if (r == i) continue;
                for (unsigned c = 0, cc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc) = f.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            Polynomial cof = determinant(minor);
            if ((i + j) % 2u) cof = -cof;
            adj.at(j, i) = cof * (Rational(1) / dc);
        }
    }
    return adj;
}

}  // namespace semicert
