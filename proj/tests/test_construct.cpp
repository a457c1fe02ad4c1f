#include <doctest.h>

#include "semicert/construct.hpp"

using namespace semicert;

namespace {

const std::vector<std::string> kXY = {"x", "y"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial P(const std::string& s, const std::vector<std::string>& names = kXY) {
    return parse_polynomial(s, names);
}

MatrixPolynomial choi(long lambda_num, long lambda_den = 1) {
    Rational l1 = make_rational(lambda_num, lambda_den) + 1;
    std::string d = to_string(l1);
    return MatrixPolynomial::parse(
        {{"x^2 + " + d + "*z^2", "-x*y", "-x*z"},
         {"-x*y", "y^2 + " + d + "*x^2", "-y*z"},
         {"-x*z", "-y*z", "z^2 + " + d + "*y^2"}},
        kXYZ);
}

}  // namespace

TEST_CASE("direction grid shape") {
    auto g1 = direction_grid(1, 8);
    CHECK(g1.size() == 2);
    auto g2 = direction_grid(2, 8);
    CHECK(g2.size() > 30);
    for (const auto& p : g2) {
        bool on_face = false;
        for (const auto& c : p)
            if (c == 1 || c == -1) on_face = true;
        CHECK(on_face);
    }
}

TEST_CASE("epsilon margin examples") {
    // a = x^2 + y^2, c = x^2: min of a/(c + x^2 + y^2) over directions is 1/2
    Form a = make_form(P("x^2 + y^2"), 2);
    Form c = make_form(P("x^2"), 2);
    EpsilonWitness w = epsilon_margin(a, c);
    CHECK(w.min_value_found == make_rational(1, 2));
    CHECK(w.epsilon == make_rational(1, 4));
    CHECK(w.epsilon <= 1);
    // analytically a - eps*c = (1-eps) x^2 + y^2 is pd iff eps < 1

    // c = 0: ctilde = x^2 + y^2, min 1, eps 1/2
    Form zero = make_form(Polynomial(2), 2);
    EpsilonWitness w2 = epsilon_margin(a, zero);
    CHECK(w2.min_value_found == 1);
    CHECK(w2.epsilon == make_rational(1, 2));

    // Motzkin variant: a = det(M_0) + (x^2+y^2+z^2)^3, c = (x^2+y^2+z^2)^3
    Polynomial q = P("x^2 + y^2 + z^2", kXYZ);
    Polynomial motzkin = P("x^4*y^2 + y^4*z^2 + z^4*x^2 - 3*x^2*y^2*z^2", kXYZ);
    Form a3 = make_form(motzkin + q * q * q, 6);
    Form c3 = make_form(q * q * q, 6);
    EpsilonWitness w3 = epsilon_margin(a3, c3);
    CHECK(w3.epsilon > 0);

    // monotone-safe: halving the returned epsilon still validates
    Polynomial margin = a3.poly - c3.poly * (w3.epsilon / 2);
    for (const auto& g : direction_grid(3, 8)) CHECK(margin.evaluate(g) > 0);

    CHECK_THROWS(epsilon_margin(make_form(P("x^2 - y^2"), 2), zero));
}

TEST_CASE("local certificate on a diagonal matrix") {
    MatrixPolynomial a = MatrixPolynomial::identity(2, 2) * P("x^2 + y^2");
    LocalPatch patch = local_certificate(a, {Rational(1), Rational(0)});
    REQUIRE(patch.terms.size() == 1);
    CHECK(patch.terms[0].weight == P("x^2 + y^2"));
    const auto& factor = std::get<HermitianSquareFactor>(patch.terms[0].factor);
    CHECK(factor.u == MatrixPolynomial::identity(2, 2));
    CHECK(patch.piece.contains({Rational(1), Rational(0)}));

    PiecewiseCertificate cert{a, {{patch.piece, patch.terms}}};
    CHECK(verify_certificate(cert, VerifyOptions{200, 1, false, 0}).pass(false));
}

TEST_CASE("local certificate eliminates off-diagonal entries") {
    MatrixPolynomial a = MatrixPolynomial::parse(
        {{"2*x^2 + y^2", "x*y"}, {"x*y", "x^2 + 2*y^2"}}, kXY);
    std::vector<Rational> x0 = {make_rational(3, 5), make_rational(4, 5)};
    LocalPatch patch = local_certificate(a, x0);
    PiecewiseCertificate cert{a, {{patch.piece, patch.terms}}};
    VerificationReport report = verify_certificate(cert, VerifyOptions{400, 2, false, 0});
    CHECK(report.identities_exact());
    CHECK(report.weights_ok());
    CHECK(patch.piece.contains(x0));
    // all square factors are constant matrices
    for (const auto& term : patch.terms) {
        const auto* sq = std::get_if<HermitianSquareFactor>(&term.factor);
        REQUIRE(sq != nullptr);
        CHECK(sq->u.is_constant());
    }
}

TEST_CASE("local certificate at a Choi point") {
    MatrixPolynomial m1 = choi(1);
    std::vector<Rational> x0 = {make_rational(2, 3), make_rational(2, 3), make_rational(1, 3)};
    REQUIRE(pd_constant(m1.evaluate(x0)));
    LocalPatch patch = local_certificate(m1, x0);
    PiecewiseCertificate cert{m1, {{patch.piece, patch.terms}}};
    VerificationReport report = verify_certificate(cert, VerifyOptions{200, 3, false, 0});
    CHECK(report.identities_exact());
    CHECK(report.weights_ok());

    // not positive definite at coordinate points
    CHECK_THROWS(local_certificate(m1, {Rational(1), Rational(0), Rational(0)}));
}

TEST_CASE("cover_sphere on scaled identity gives one global piece") {
    Polynomial w = P("x^2 + y^2") * P("x^2 + y^2");
    MatrixPolynomial a = MatrixPolynomial::identity(2, 2) * w;
    CoverResult result = cover_sphere(a);
    REQUIRE(result.certificate.has_value());
    CHECK(result.certificate->pieces.size() == 1);
    CHECK(verify_certificate(*result.certificate).pass(true));
}

TEST_CASE("cover_sphere rejects the Choi matrix with a witness") {
    CoverResult result = cover_sphere(choi(1));
    CHECK(!result.certificate.has_value());
    REQUIRE(result.rejection_witness.has_value());
    CHECK(!pd_constant(choi(1).evaluate(*result.rejection_witness)));
}

TEST_CASE("cover_sphere on a strictly pd perturbation of Choi") {
    MatrixPolynomial a = choi(1);
    Polynomial q = P("x^2 + y^2 + z^2", kXYZ);
    for (unsigned i = 0; i < 3; ++i) a.at(i, i) += q;
    ConstructOptions options;
    options.grid = 4;
    CoverResult result = cover_sphere(a, options);
    REQUIRE(result.certificate.has_value());
    VerificationReport report = verify_certificate(*result.certificate);
    CHECK(report.identities_exact());
    CHECK(report.weights_ok());
    // covering validated on the 4x grid inside cover_sphere; every direction
    // of the refined grid lies in some cone piece
    for (const auto& g : direction_grid(3, options.grid * 4)) {
        bool covered = false;
        for (const auto& [piece, terms] : result.certificate->pieces)
            if (piece.contains(g)) covered = true;
        CHECK(covered);
    }
}

TEST_CASE("epsilon_regularize") {
    MatrixPolynomial zero(1, 1, 2);
    MatrixPolynomial r = epsilon_regularize(zero, Rational(1), 2);
    CHECK(r.at(0, 0) == P("x^2 + y^2"));
    CHECK_THROWS(epsilon_regularize(zero, Rational(0)));
    CHECK_THROWS(epsilon_regularize(zero, Rational(-1)));

    // M_0 + (1/10)-regularization covers; the input is nearly singular at
    // the seven Motzkin directions, so caps there get small and the patch
    // count is kept in check with a coarse construction grid
    MatrixPolynomial m0 = choi(0);
    MatrixPolynomial reg = epsilon_regularize(m0, make_rational(1, 10));
    ConstructOptions options;
    options.grid = 2;
    options.samples = 32;
    CoverResult result = cover_sphere(reg, options);
    REQUIRE(result.certificate.has_value());
    VerificationReport report = verify_certificate(*result.certificate, VerifyOptions{64, 5, false, 0});
    CHECK(report.identities_exact());
    CHECK(report.weights_ok());
}
