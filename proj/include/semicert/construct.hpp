#pragma once

#include "semicert/certificate.hpp"
#include "semicert/verifier.hpp"

namespace semicert {

// Rational direction grid covering the unit sphere: points on the faces of
// the cube [-1,1]^n, `per_edge` steps per face edge (so 4*per_edge points per
// great circle through face centers). Evaluation targets are homogeneous, so
// directions never need normalizing.
std::vector<std::vector<Rational>> direction_grid(unsigned nvars, unsigned per_edge);

struct EpsilonWitness {
    Rational epsilon;
    unsigned grid_resolution = 0;
    Rational min_value_found;  // min over the grid of a / (c + sum x_i^d)
};

// The margin of Lemma "a - eps*c stays positive definite": approximates
// m = min of a on {c~ = 1} over the direction grid and returns eps = m/2,
// then validates a - eps*c > 0 at every grid point and on a 2x refined grid.
EpsilonWitness epsilon_margin(const Form& a, const Form& c, unsigned grid = 8);

struct LocalPatch {
    std::vector<Rational> center;
    SemiAlgebraicPiece piece;
    std::vector<CertificateTerm> terms;  // constant square factors only
};

struct ConstructOptions {
    unsigned grid = 8;
    unsigned samples = 64;
    uint64_t seed = 0x10ca1ULL;
    unsigned cap_shrink_rounds = 20;
    unsigned patch_budget = 4096;
};

// One off-diagonal entry is eliminated per step by subtracting
// sign(b)*b*C with C = B(x0)/|b(x0)| (plus the eps1*h*Id bookkeeping); the
// identity sum(terms) = A is exact on all of R^n, only weight positivity is
// local to the returned spherical-cap piece.
LocalPatch local_certificate(const MatrixPolynomial& a, const std::vector<Rational>& x0,
                             const ConstructOptions& options = {});

struct CoverResult {
    std::optional<PiecewiseCertificate> certificate;
    // set when the input failed the grid positive-definiteness check
    std::optional<std::vector<Rational>> rejection_witness;
    std::string message;
};

// Greedy covering of the sphere by cap patches; pieces are the cones over
// the caps, so the certificate covers all of R^n.
CoverResult cover_sphere(const MatrixPolynomial& a, const ConstructOptions& options = {});

// A + eps * (x_1^2 + ... + x_n^2)^(d/2) * Id; d defaults to deg(A) (or 2 for
// the zero matrix) and must be even to preserve homogeneity.
MatrixPolynomial epsilon_regularize(const MatrixPolynomial& a, const Rational& eps, int d = -1);

}  // namespace semicert
