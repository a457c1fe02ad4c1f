#include "semicert/certificate.hpp"

namespace semicert {

MatrixPolynomial CertificateTerm::contribution() const {
    if (const auto* sq = std::get_if<HermitianSquareFactor>(&factor)) {
        MatrixPolynomial ut = sq->u.transpose();
        MatrixPolynomial inner =
            sq->gram ? MatrixPolynomial::from_constant(*sq->gram, sq->u.nvars()) * sq->u : sq->u;
        return (ut * inner) * weight;
    }
    const auto& p = std::get<UnivariatePsdFactor>(factor).p;
    return p * weight;
}

CertificateTerm make_square_term(Polynomial weight, WeightProof proof, MatrixPolynomial u) {
    return CertificateTerm{std::move(weight), std::move(proof),
                           HermitianSquareFactor{std::move(u), std::nullopt}};
}

CertificateTerm make_gram_term(Polynomial weight, WeightProof proof, MatrixPolynomial u,
                               RationalMatrix gram) {
    return CertificateTerm{std::move(weight), std::move(proof),
                           HermitianSquareFactor{std::move(u), std::move(gram)}};
}

CertificateTerm make_const_psd_term(Polynomial weight, WeightProof proof, RationalMatrix q,
                                    unsigned nvars) {
    MatrixPolynomial id = MatrixPolynomial::identity(q.rows(), nvars);
    return CertificateTerm{std::move(weight), std::move(proof),
                           HermitianSquareFactor{std::move(id), std::move(q)}};
}

CertificateTerm make_univariate_psd_term(Polynomial weight, WeightProof proof, MatrixPolynomial p) {
    return CertificateTerm{std::move(weight), std::move(proof), UnivariatePsdFactor{std::move(p)}};
}

MatrixPolynomial piece_sum(const PiecewiseCertificate& cert, size_t piece_index) {
    const auto& terms = cert.pieces.at(piece_index).second;
    MatrixPolynomial acc(cert.target.rows(), cert.target.cols(), cert.target.nvars());
    for (const auto& term : terms) acc = acc + term.contribution();
    return acc;
}

std::optional<SosProof> even_monomial_sos(const Polynomial& f) {
    SosProof proof;
    for (const auto& [e, c] : f.terms()) {
        if (c < 0 || !all_even(e)) return std::nullopt;
        MultiIndex half(e.size());
        for (size_t i = 0; i < e.size(); ++i) half[i] = e[i] / 2;
        proof.squares.emplace_back(c, Polynomial::monomial(half, Rational(1)));
    }
    return proof;
}

SosProof constant_sos(const Rational& c, unsigned nvars) {
    if (c < 0) throw std::invalid_argument("constant_sos: negative constant");
    SosProof proof;
    if (c > 0) proof.squares.emplace_back(c, Polynomial::constant(nvars, Rational(1)));
    return proof;
}

}  // namespace semicert
