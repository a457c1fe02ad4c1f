#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "semicert/matrix_polynomial.hpp"
#include "semicert/piece.hpp"

namespace semicert {

// ---- weight positivity proofs (three tiers) ----

// f = sum_k c_k s_k^2 with c_k >= 0 rational; verified structurally.
struct SosProof {
    std::vector<std::pair<Rational, Polynomial>> squares;
};

// f = sum_k c_k m_k^2 g_{i_k} + SOS remainder, each g an inequality of the
// piece; verified structurally.
struct ConeProof {
    struct Atom {
        Rational scale;
        Polynomial monomial;
        unsigned generator;  // index into piece constraints
    };
    std::vector<Atom> atoms;
    SosProof remainder;
};

// No algebraic proof; the verifier rejection-samples the piece.
struct SampledProof {
    unsigned samples = 200;
    uint64_t seed = 0x5eed0001u;
};

using WeightProof = std::variant<SosProof, ConeProof, SampledProof>;

// ---- term factors ----

// Contributes weight * U^T Q U with Q a constant psd matrix (Id when absent);
// U may be rectangular (r x m). Q is checked exactly by the verifier, so a
// psd constant factor never needs irrational square roots.
struct HermitianSquareFactor {
    MatrixPolynomial u;
    std::optional<RationalMatrix> gram;
};

// Contributes weight * P for a symmetric matrix polynomial P in a single
// variable, certified psd on all of R by exact minor analysis. Covers the
// C_X / C_Y style blocks which are sums of squares over R but not over Q.
struct UnivariatePsdFactor {
    MatrixPolynomial p;
};

using TermFactor = std::variant<HermitianSquareFactor, UnivariatePsdFactor>;

struct CertificateTerm {
    Polynomial weight;
    WeightProof proof;
    TermFactor factor;

    // The symmetric matrix this term adds to the piece identity.
    MatrixPolynomial contribution() const;
};

CertificateTerm make_square_term(Polynomial weight, WeightProof proof, MatrixPolynomial u);
CertificateTerm make_gram_term(Polynomial weight, WeightProof proof, MatrixPolynomial u,
                               RationalMatrix gram);
// weight * Q with Q constant psd (U = Id).
CertificateTerm make_const_psd_term(Polynomial weight, WeightProof proof, RationalMatrix q,
                                    unsigned nvars);
CertificateTerm make_univariate_psd_term(Polynomial weight, WeightProof proof, MatrixPolynomial p);

struct PiecewiseCertificate {
    MatrixPolynomial target;
    std::vector<std::pair<SemiAlgebraicPiece, std::vector<CertificateTerm>>> pieces;
};

// Sum of term contributions for one piece.
MatrixPolynomial piece_sum(const PiecewiseCertificate& cert, size_t piece_index);

// SOS proof for polynomials whose terms all have even exponents and positive
// coefficients (e.g. x1^d + ... + xn^d); nullopt otherwise.
std::optional<SosProof> even_monomial_sos(const Polynomial& f);

// Constant positive weights are squares with a rational scale.
SosProof constant_sos(const Rational& c, unsigned nvars);

}  // namespace semicert
