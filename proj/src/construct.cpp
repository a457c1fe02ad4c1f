#include "semicert/construct.hpp"

#include <set>
#include <sstream>

namespace semicert {

std::vector<std::vector<Rational>> direction_grid(unsigned nvars, unsigned per_edge) {
    if (nvars == 0) throw std::invalid_argument("direction_grid: nvars == 0");
    std::set<std::vector<Rational>> points;
    if (nvars == 1) {
        points.insert({Rational(1)});
        points.insert({Rational(-1)});
    } else {
        // every face of the cube [-1,1]^n, remaining coordinates on a
        // (per_edge+1)-point lattice
        std::vector<unsigned> idx(nvars - 1, 0);
        for (unsigned face = 0; face < nvars; ++face) {
            for (int face_sign : {1, -1}) {
                std::fill(idx.begin(), idx.end(), 0);
                while (true) {
                    std::vector<Rational> pt(nvars);
                    pt[face] = Rational(face_sign);
                    for (unsigned k = 0, v = 0; v < nvars; ++v) {
                        if (v == face) continue;
                        pt[v] = make_rational(2 * static_cast<long>(idx[k]) - static_cast<long>(per_edge),
                                              static_cast<long>(per_edge));
                        ++k;
                    }
                    points.insert(pt);
                    unsigned k = 0;
                    while (k < idx.size() && idx[k] == per_edge) idx[k++] = 0;
                    if (k == idx.size()) break;
                    ++idx[k];
                    for (unsigned i = 0; i < k; ++i) idx[i] = 0;
                }
            }
        }
    }
    return {points.begin(), points.end()};
}

namespace {

Polynomial power_sum(unsigned nvars, unsigned d) {
    Polynomial p(nvars);
    for (unsigned i = 0; i < nvars; ++i) {
        MultiIndex e(nvars, 0);
        e[i] = d;
        p.add_term(e, Rational(1));
    }
    return p;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

EpsilonWitness epsilon_margin(const Form& a, const Form& c, unsigned grid) {
    if (a.degree != c.degree && !c.poly.is_zero())
        throw std::invalid_argument("epsilon_margin: degree mismatch");
    if (a.degree % 2u) throw std::invalid_argument("epsilon_margin: degree must be even");
    unsigned n = a.poly.nvars();
    Polynomial ctilde = c.poly + power_sum(n, a.degree);
    auto grid_points = direction_grid(n, grid);
    bool first = true;
    Rational min_ratio;
    for (const auto& g : grid_points) {
        Rational av = a.poly.evaluate(g);
        if (av <= 0) throw std::invalid_argument("epsilon_margin: a not positive at a grid point");
        Rational cv = ctilde.evaluate(g);
        Rational ratio = av / cv;
        if (first || ratio < min_ratio) {
            min_ratio = ratio;
            first = false;
        }
    }
    EpsilonWitness w;
    w.grid_resolution = grid;
    w.min_value_found = min_ratio;
    w.epsilon = min_ratio / 2;
    // validation: a - eps*c positive on the grid and on a refined grid
    Polynomial margin = a.poly - c.poly * w.epsilon;
    for (const auto& g : grid_points)
        if (margin.evaluate(g) <= 0)
            throw std::logic_error("epsilon_margin: validation failed on the construction grid");
    for (const auto& g : direction_grid(n, grid * 2))
        if (margin.evaluate(g) <= 0)
            throw std::logic_error("epsilon_margin: validation failed on the refined grid");
    return w;
}

namespace {

// explicit SOS when the polynomial is a positive combination of even
// monomials, sampling otherwise
WeightProof best_proof(const Polynomial& w, unsigned samples, uint64_t seed) {
    if (auto sos = even_monomial_sos(w)) return *sos;
    return SampledProof{samples, seed};
}

// terms for a diagonal matrix: one term per distinct diagonal polynomial,
// grouping equal entries into a single 0/1 selector square
void emit_diagonal_terms(const MatrixPolynomial& b, std::vector<CertificateTerm>& terms,
                         const ConstructOptions& options) {
    unsigned m = b.size();
    std::vector<bool> used(m, false);
    for (unsigned i = 0; i < m; ++i) {
        if (used[i] || b.at(i, i).is_zero()) continue;
        std::vector<unsigned> group;
        for (unsigned j = i; j < m; ++j)
            if (!used[j] && b.at(j, j) == b.at(i, i)) {
                group.push_back(j);
                used[j] = true;
            }
        MatrixPolynomial u(static_cast<unsigned>(group.size()), m, b.nvars());
        for (unsigned r = 0; r < group.size(); ++r)
            u.at(r, group[r]) = Polynomial::constant(b.nvars(), Rational(1));
        if (group.size() == m) u = MatrixPolynomial::identity(m, b.nvars());
        terms.push_back(make_square_term(b.at(i, i),
                                         best_proof(b.at(i, i), options.samples, options.seed), u));
    }
}

// Builds the cap piece for a given rho^2, with a sampling box matched to the
// cap so rejection sampling keeps a usable acceptance rate even on thin caps.
SemiAlgebraicPiece make_cap(const std::vector<Rational>& x0, const Rational& rho2, unsigned nvars) {
    Polynomial inner(nvars);  // <x, x0>
    for (unsigned i = 0; i < nvars; ++i) inner += Polynomial::variable(nvars, i) * x0[i];
    Polynomial norm_x = power_sum(nvars, 2);
    Rational norm_x0 = dot(x0, x0);
    SemiAlgebraicPiece piece;
    piece.constraints = {inner * inner - norm_x * (rho2 * norm_x0)};
    std::ostringstream label;
    label << "cap(rho^2=" << to_string(rho2) << ") at (";
    for (size_t i = 0; i < x0.size(); ++i) label << (i ? "," : "") << to_string(x0[i]);
    label << ")";
    piece.label = label.str();
    Rational angular = sqrt_approx((Rational(1) - rho2) * norm_x0, 12) * 2 + make_rational(1, 64);
    std::vector<std::pair<Rational, Rational>> box;
    for (unsigned i = 0; i < nvars; ++i) box.emplace_back(x0[i] - angular, x0[i] + angular);
    piece.sampling_box = std::move(box);
    return piece;
}

// widen the cap while every sampled weight stays nonnegative, shrink when a
// violation shows up; the validation is denser than routine verification
// (exact values on a refined direction grid plus several sampling seeds) so
// caps accepted here keep passing later sampled checks
SemiAlgebraicPiece fit_cap(const std::vector<Rational>& x0, const std::vector<CertificateTerm>& terms,
                           unsigned nvars, const ConstructOptions& options) {
    auto probe_grid = direction_grid(nvars, options.grid * 4);
    std::vector<const Polynomial*> sampled_weights;
    for (const auto& term : terms)
        if (std::holds_alternative<SampledProof>(term.proof)) sampled_weights.push_back(&term.weight);
    auto cap_ok = [&](const SemiAlgebraicPiece& piece, unsigned round) {
        std::vector<const std::vector<Rational>*> inside;
        for (const auto& g : probe_grid)
            if (piece.contains(g)) inside.push_back(&g);
        for (const Polynomial* w : sampled_weights) {
            for (const auto* g : inside)
                if (w->evaluate(*g) < 0) return false;
            for (unsigned s = 0; s < 3; ++s) {
                auto outcome = sample_nonneg(*w, piece, options.samples,
                                             options.seed ^ (0x9e3779b9u * (round + 1)) ^ (s * 77u));
                if (outcome.kind == SampleOutcome::Kind::Witness) return false;
            }
        }
        return true;
    };
    // the emitted cap sits one halving tighter than the widest cap that
    // passed, as a guard against sampling-seed variance
    auto with_margin = [&](const Rational& rho2) { return make_cap(x0, (rho2 + 1) / 2, nvars); };
    Rational rho2 = make_rational(1, 2);
    unsigned round = 0;
    if (cap_ok(make_cap(x0, rho2, nvars), round++)) {
        Rational best = rho2;
        while (rho2 > make_rational(1, 64)) {
            rho2 /= 4;
            if (!cap_ok(make_cap(x0, rho2, nvars), round++)) break;
            best = rho2;
        }
        return with_margin(best);
    }
    for (; round <= options.cap_shrink_rounds; ++round) {
        rho2 = (rho2 + 1) / 2;
        if (cap_ok(make_cap(x0, rho2, nvars), round)) return with_margin(rho2);
    }
    throw std::runtime_error("local_certificate: cap did not stabilize while shrinking");
}

}  // namespace

LocalPatch local_certificate(const MatrixPolynomial& a, const std::vector<Rational>& x0,
                             const ConstructOptions& options) {
    if (!a.is_symmetric()) throw std::invalid_argument("local_certificate: matrix not symmetric");
    unsigned n = a.nvars(), m = a.size();
    if (x0.size() != n) throw std::invalid_argument("local_certificate: center arity mismatch");
    int deg = a.degree();
    if (deg < 0) throw std::invalid_argument("local_certificate: zero matrix");
    unsigned d = static_cast<unsigned>(deg);
    if (d % 2u || !a.is_homogeneous(d))
        throw std::invalid_argument("local_certificate: entries must be forms of one even degree");
    if (!pd_constant(a.evaluate(x0)))
        throw std::invalid_argument("local_certificate: A(x0) is not positive definite");

    std::vector<CertificateTerm> terms;

    if (a.is_diagonal()) {
        emit_diagonal_terms(a, terms, options);
        LocalPatch patch;
        patch.center = x0;
        patch.terms = std::move(terms);
        patch.piece = fit_cap(x0, patch.terms, n, options);
        return patch;
    }

    // Precondition by a constant congruence T A T^T so the center value
    // becomes (nearly) the identity; this keeps every elimination weight at
    // a uniform margin instead of cascading toward zero.
    RationalMatrix q = a.evaluate(x0);
    CongruentDiagonalization cd = congruent_diagonalize(q);
    RationalMatrix t = cd.s;
    for (unsigned k = 0; k < m; ++k) {
        if (cd.diag[k] <= 0) throw std::logic_error("local_certificate: pd center lost a pivot");
        Rational r = Rational(1) / sqrt_approx(cd.diag[k], 12);
        for (unsigned c = 0; c < m; ++c) t.at(k, c) *= r;
    }
    MatrixPolynomial tpoly = MatrixPolynomial::from_constant(t, n);
    MatrixPolynomial aprime = tpoly * a * tpoly.transpose();
    RationalMatrix center = aprime.evaluate(x0);  // diagonal, entries near 1

    Polynomial sigma = power_sum(n, d);
    Rational sigma0 = sigma.evaluate(x0);
    Rational min_diag = center.at(0, 0);
    for (unsigned k = 1; k < m; ++k) min_diag = std::min(min_diag, center.at(k, k));
    // off-diagonal perturbation: all entries of A'(x0) - eps*sigma0 are
    // nonzero and the diagonal stays strictly dominant
    Rational eps = min_diag / (2 * static_cast<long>(m) * sigma0);
    for (int tries = 0; tries < 64; ++tries, eps /= 2) {
        bool clean = true;
        for (unsigned i = 0; i < m && clean; ++i)
            for (unsigned j = i + 1; j < m && clean; ++j)
                if (aprime.at(i, j) == sigma * eps) clean = false;
        if (clean) break;
    }

    RationalMatrix tinv = t.inverse();
    MatrixPolynomial tinv_t = MatrixPolynomial::from_constant(tinv.transpose(), n);
    auto back = [&](const MatrixPolynomial& u) { return u * tinv_t; };

    // eps*sigma * (ones)^T(ones), mapped back through the congruence
    MatrixPolynomial sum_check(m, m, n);
    {
        MatrixPolynomial ones_row(1, m, n);
        for (unsigned j = 0; j < m; ++j) ones_row.at(0, j) = Polynomial::constant(n, Rational(1));
        Polynomial w = sigma * eps;
        terms.push_back(make_square_term(w, *even_monomial_sos(w), back(ones_row)));
        MatrixPolynomial ones(m, m, n);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j) ones.at(i, j) = w;
        sum_check = sum_check + ones;
    }

    // one rank-one square per off-diagonal entry: weight eps*sigma - A'_ij
    // on (e_i - e_j)^T (e_i - e_j); the weight is eps*sigma0 at the center
    for (unsigned i = 0; i < m; ++i) {
        for (unsigned j = i + 1; j < m; ++j) {
            Polynomial w = sigma * eps - aprime.at(i, j);
            MatrixPolynomial u(1, m, n);
            u.at(0, i) = Polynomial::constant(n, Rational(1));
            u.at(0, j) = Polynomial::constant(n, Rational(-1));
            WeightProof proof = aprime.at(i, j).is_zero()
                                    ? WeightProof(*even_monomial_sos(w))
                                    : WeightProof(SampledProof{options.samples,
                                                               options.seed ^ (i * 37u + j)});
            terms.push_back(make_square_term(w, std::move(proof), back(u)));
            MatrixPolynomial uu = u.transpose() * u;
            sum_check = sum_check + uu * w;
        }
    }

    // diagonal remainder D_pp = A'_pp + sum_{j != p} A'_pj - m*eps*sigma
    for (unsigned p = 0; p < m; ++p) {
        Polynomial w = aprime.at(p, p) - sigma * (eps * static_cast<long>(m));
        for (unsigned j = 0; j < m; ++j)
            if (j != p) w += aprime.at(p, j);
        if (w.is_zero()) continue;
        MatrixPolynomial u(1, m, n);
        u.at(0, p) = Polynomial::constant(n, Rational(1));
        terms.push_back(make_square_term(w, best_proof(w, options.samples, options.seed ^ (p * 97u)),
                                         back(u)));
        MatrixPolynomial uu = u.transpose() * u;
        sum_check = sum_check + uu * w;
    }

    if (sum_check != aprime)
        throw std::logic_error("local_certificate: elimination identity broke");

    LocalPatch patch;
    patch.center = x0;
    patch.terms = std::move(terms);
    patch.piece = fit_cap(x0, patch.terms, n, options);
    return patch;
}

CoverResult cover_sphere(const MatrixPolynomial& a, const ConstructOptions& options) {
    CoverResult result;
    if (!a.is_symmetric()) throw std::invalid_argument("cover_sphere: matrix not symmetric");
    int deg = a.degree();
    if (deg < 0) throw std::invalid_argument("cover_sphere: zero matrix");
    unsigned d = static_cast<unsigned>(deg);
    if (d % 2u || !a.is_homogeneous(d))
        throw std::invalid_argument("cover_sphere: entries must be forms of one even degree");
    unsigned n = a.nvars();

    // grid pre-check for strict positive definiteness
    auto grid = direction_grid(n, options.grid);
    bool rejected = false;
    Rational worst_det;
    std::vector<Rational> worst_point;
    for (const auto& g : grid) {
        RationalMatrix ag = a.evaluate(g);
        if (!pd_constant(ag)) {
            Rational det = ag.determinant();
            if (!rejected || det < worst_det) {
                worst_det = det;
                worst_point = g;
            }
            rejected = true;
        }
    }
    if (rejected) {
        result.rejection_witness = worst_point;
        std::ostringstream os;
        os << "input is not positive definite on the sphere grid; worst point det="
           << to_string(worst_det);
        result.message = os.str();
        return result;
    }

    PiecewiseCertificate cert;
    cert.target = a;

    if (a.is_diagonal()) {
        std::vector<CertificateTerm> terms;
        emit_diagonal_terms(a, terms, options);
        cert.pieces.emplace_back(whole_space_piece(n), std::move(terms));
        result.certificate = std::move(cert);
        result.message = "diagonal input: single global piece";
        return result;
    }

    auto covered = [&](const std::vector<Rational>& g) {
        for (const auto& [piece, terms] : cert.pieces)
            if (piece.contains(g)) return true;
        return false;
    };

    unsigned patches = 0;
    auto add_patch = [&](const std::vector<Rational>& g) {
        if (++patches > options.patch_budget)
            throw std::runtime_error("cover_sphere: patch budget exceeded");
        LocalPatch patch = local_certificate(a, g, options);
        cert.pieces.emplace_back(std::move(patch.piece), std::move(patch.terms));
    };

    for (const auto& g : grid)
        if (!covered(g)) add_patch(g);

    // validate on a 4x refined grid, patching any hole found
    for (int pass = 0; pass < 4; ++pass) {
        bool holes = false;
        for (const auto& g : direction_grid(n, options.grid * 4))
            if (!covered(g)) {
                holes = true;
                add_patch(g);
            }
        if (!holes) break;
    }

    std::ostringstream os;
    os << cert.pieces.size() << " cap pieces";
    result.message = os.str();
    result.certificate = std::move(cert);
    return result;
}

MatrixPolynomial epsilon_regularize(const MatrixPolynomial& a, const Rational& eps, int d) {
    if (eps <= 0) throw std::invalid_argument("epsilon_regularize: eps must be positive");
    if (!a.is_symmetric()) throw std::invalid_argument("epsilon_regularize: matrix not symmetric");
    if (d < 0) d = std::max(a.degree(), 2);
    if (d % 2) throw std::invalid_argument("epsilon_regularize: degree must be even");
    if (!a.is_zero() && !a.is_homogeneous(static_cast<unsigned>(d)))
        throw std::invalid_argument("epsilon_regularize: entries must be forms of degree d");
    unsigned n = a.nvars();
    Polynomial q = power_sum(n, 2);
    Polynomial bump = Polynomial::constant(n, eps);
    for (int k = 0; k < d / 2; ++k) bump *= q;
    MatrixPolynomial out = a;
    for (unsigned i = 0; i < a.size(); ++i) out.at(i, i) += bump;
    return out;
}

}  // namespace semicert
