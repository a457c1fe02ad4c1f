#pragma once

#include <string>

#include "semicert/certificate.hpp"
#include "semicert/univariate_roots.hpp"

namespace semicert {

// ---- exact psd decisions reused by the verifier ----

// Symmetric matrix polynomial in one variable, size <= 4: psd for every real
// t iff each of the 2^m - 1 principal minors is nonnegative on R.
bool psd_univariate_matrix(const MatrixPolynomial& a);

// ---- sampling ----

struct SampleOutcome {
    enum class Kind { NoCounterexample, Witness, PieceLooksEmpty } kind;
    std::vector<Rational> witness;  // point in the piece with f < 0
    unsigned accepted = 0;          // samples that landed in the piece
};

// Deterministic given the seed: rejection-samples rational points of the
// piece inside its sampling box (unit box by default), evaluates f exactly.
SampleOutcome sample_nonneg(const Polynomial& f, const SemiAlgebraicPiece& piece, unsigned n,
                            uint64_t seed);

// ---- verification ----

struct WeightStatus {
    enum class Kind { ProvedExact, SampledOnly, Failed } kind;
    unsigned samples = 0;
    std::string detail;
    std::vector<Rational> witness;
};

struct IdentityStatus {
    bool exact = false;
    // on failure: a point, entry, and the two values that differ there
    std::vector<Rational> witness;
    unsigned row = 0, col = 0;
    Rational lhs, rhs;
};

struct CoveringStatus {
    bool checked = false;
    unsigned samples = 0;
    std::optional<std::vector<Rational>> uncovered;
};

struct VerificationReport {
    std::vector<IdentityStatus> identity_status;             // per piece
    std::vector<std::vector<WeightStatus>> weight_status;    // per piece, per term
    CoveringStatus covering_status;

    bool identities_exact() const;
    bool weights_ok() const;  // no Failed
    bool pass(bool require_covering) const;
    std::string summary() const;
};

struct VerifyOptions {
    unsigned samples = 200;
    uint64_t seed = 0x5eedbeefULL;
    bool check_covering = true;
    unsigned covering_samples = 400;
};

VerificationReport verify_certificate(const PiecewiseCertificate& cert,
                                      const VerifyOptions& options = {});

// Point where the (nonzero) difference of two matrix polynomials shows up;
// deterministic, used to attach witnesses to failed identities.
struct MatrixMismatch {
    std::vector<Rational> point;
    unsigned row, col;
    Rational lhs, rhs;
};
std::optional<MatrixMismatch> find_matrix_mismatch(const MatrixPolynomial& a,
                                                   const MatrixPolynomial& b);

}  // namespace semicert
