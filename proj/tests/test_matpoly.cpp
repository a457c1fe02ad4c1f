#include <doctest.h>

#include <random>

#include "semicert/matrix_polynomial.hpp"
#include "semicert/smith.hpp"

using namespace semicert;

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};
const std::vector<std::string> kT = {"t"};

Polynomial P(const std::string& s, const std::vector<std::string>& names) {
    return parse_polynomial(s, names);
}

// M_lambda from the Choi family; lambda passed as a rational constant.
MatrixPolynomial choi_matrix(const Rational& lambda) {
    Rational l1 = lambda + 1;
    std::string d = to_string(l1);
    return MatrixPolynomial::parse(
        {{"x^2 + " + d + "*z^2", "-x*y", "-x*z"},
         {"-x*y", "y^2 + " + d + "*x^2", "-y*z"},
         {"-x*z", "-y*z", "z^2 + " + d + "*y^2"}},
        kXYZ);
}

MatrixPolynomial random_matrix_poly(std::mt19937_64& rng, unsigned n, unsigned nvars,
                                    unsigned max_deg, int span = 4) {
    std::uniform_int_distribution<int> coef(-span, span);
    MatrixPolynomial m(n, n, nvars);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            Polynomial p(nvars);
            unsigned terms = 1 + rng() % 3;
            for (unsigned t = 0; t < terms; ++t) {
                MultiIndex e(nvars, 0);
                unsigned budget = rng() % (max_deg + 1);
                for (unsigned v = 0; v < nvars && budget; ++v) {
                    unsigned use = rng() % (budget + 1);
                    e[v] = use;
                    budget -= use;
                }
                p.add_term(e, Rational(coef(rng)));
            }
            m.at(i, j) = p;
        }
    return m;
}

}  // namespace

TEST_CASE("to_biform examples") {
    // identity 2x2 constant matrix -> y1^2 + y2^2
    MatrixPolynomial id2 = MatrixPolynomial::identity(2, 2);
    Biform b = to_biform(id2);
    std::vector<std::string> names = {"x1", "x2", "y1", "y2"};
    CHECK(b.poly == P("y1^2 + y2^2", names));

    // diag(x^2, y^2) -> x^2 y1^2 + y^2 y2^2
    MatrixPolynomial diag = MatrixPolynomial::parse({{"x^2", "0"}, {"0", "y^2"}}, {"x", "y"});
    CHECK(to_biform(diag).poly == P("x^2*y1^2 + y^2*y2^2", {"x", "y", "y1", "y2"}));

    // Choi biquadratic: coefficient of S^2 is x^2 + 2 z^2, cross term -2xy ST
    Biform choi = to_biform(choi_matrix(Rational(1)));
    std::vector<std::string> cs = {"x", "y", "z", "S", "T", "U"};
    Polynomial expected = P(
        "x^2*S^2 + 2*z^2*S^2 - 2*x*y*S*T - 2*x*z*S*U + y^2*T^2 + 2*x^2*T^2 - 2*y*z*T*U + "
        "z^2*U^2 + 2*y^2*U^2",
        cs);
    CHECK(choi.poly == expected);

    MatrixPolynomial nonsym = MatrixPolynomial::parse({{"0", "x"}, {"0", "0"}}, {"x", "y"});
    CHECK_THROWS(to_biform(nonsym));
}

TEST_CASE("to_biform evaluates to y^T A y") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 20; ++it) {
        MatrixPolynomial a = random_matrix_poly(rng, 2, 2, 2);
        a = a + a.transpose();  // symmetrize
        Biform b = to_biform(a);
        std::vector<Rational> x = {make_rational(static_cast<long>(rng() % 9) - 4, 4),
                                   make_rational(static_cast<long>(rng() % 9) - 4, 4)};
        std::vector<Rational> y = {make_rational(static_cast<long>(rng() % 9) - 4, 4),
                                   make_rational(static_cast<long>(rng() % 9) - 4, 4)};
        RationalMatrix ax = a.evaluate(x);
        Rational quad(0);
        for (unsigned i = 0; i < 2; ++i)
            for (unsigned j = 0; j < 2; ++j) quad += y[i] * ax.at(i, j) * y[j];
        std::vector<Rational> xy = {x[0], x[1], y[0], y[1]};
        CHECK(b.poly.evaluate(xy) == quad);
    }
}

TEST_CASE("determinant identities from the Choi family") {
    MatrixPolynomial m0 = choi_matrix(Rational(0));
    Polynomial det0 = determinant(m0);
    CHECK(det0 == P("x^4*y^2 + y^4*z^2 + z^4*x^2 - 3*x^2*y^2*z^2", kXYZ));

    // det(M_lambda)(1,1,1) = lambda (lambda+3)^2 as a polynomial identity,
    // treating lambda as a fourth variable.
    std::vector<std::string> xyzl = {"x", "y", "z", "l"};
    MatrixPolynomial ml = MatrixPolynomial::parse(
        {{"x^2 + l*z^2 + z^2", "-x*y", "-x*z"},
         {"-x*y", "y^2 + l*x^2 + x^2", "-y*z"},
         {"-x*z", "-y*z", "z^2 + l*y^2 + y^2"}},
        xyzl);
    Polynomial det = determinant(ml);
    // substitute x = y = z = 1, keep lambda
    Polynomial one = Polynomial::constant(1, Rational(1));
    Polynomial lam = Polynomial::variable(1, 0);
    Polynomial at_ones = substitute(det, {one, one, one, lam});
    CHECK(at_ones == P("l^3 + 6*l^2 + 9*l", {"l"}));
    CHECK(at_ones == lam * (lam + Polynomial::constant(1, Rational(3))) *
                         (lam + Polynomial::constant(1, Rational(3))));
    CHECK(at_ones.evaluate({Rational(1)}) == 16);

    CHECK(determinant(MatrixPolynomial::identity(4, 2)) == Polynomial::constant(2, Rational(1)));
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(1234);
    for (int it = 0; it < 12; ++it) {
        MatrixPolynomial a = random_matrix_poly(rng, 3, 2, 1, 2);
        MatrixPolynomial b = random_matrix_poly(rng, 3, 2, 1, 2);
        CHECK(determinant(a * b) == determinant(a) * determinant(b));
    }
}

TEST_CASE("principal minors") {
    MatrixPolynomial m0 = choi_matrix(Rational(0));
    CHECK(principal_minor(m0, {0}) == P("x^2 + z^2", kXYZ));
    CHECK(principal_minor(m0, {0, 1, 2}) == determinant(m0));
    Polynomial expect = P("x^2 + z^2", kXYZ) * P("y^2 + x^2", kXYZ) - P("x^2*y^2", kXYZ);
    CHECK(principal_minor(m0, {0, 1}) == expect);
    CHECK_THROWS(principal_minor(m0, {}));
    CHECK_THROWS(principal_minor(m0, {3}));
}

TEST_CASE("cauchy-binet expansion") {
    // A = Id_2
    CauchyBinetExpansion e = cauchy_binet_expand(MatrixPolynomial::identity(2, 1));
    CHECK(e.gram_determinant == Polynomial::constant(1, Rational(1)));
    REQUIRE(e.row_minors.size() == 1);
    CHECK(e.row_minors[0] == Polynomial::constant(1, Rational(1)));

    // rows (-x, y, z), (0, -z, y), (0, -z, y)
    MatrixPolynomial a =
        MatrixPolynomial::parse({{"-x", "y", "z"}, {"0", "-z", "y"}, {"0", "-z", "y"}}, kXYZ);
    CauchyBinetExpansion cb = cauchy_binet_expand(a);
    Polynomial sum(3);
    for (const auto& minor : cb.row_minors) sum += minor * minor;
    CHECK(sum == cb.gram_determinant);
    CHECK(cb.gram_determinant == determinant(a.transpose() * a));

    CHECK_THROWS(cauchy_binet_expand(MatrixPolynomial(2, 3, 1)));
}

TEST_CASE("cauchy-binet identity on random integer matrices") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int it = 0; it < 30; ++it) {
        unsigned m = 1 + rng() % 3;
        unsigned s = m + rng() % (6 - m);
        MatrixPolynomial a(s, m, 1);
        for (unsigned i = 0; i < s; ++i)
            for (unsigned j = 0; j < m; ++j)
                a.at(i, j) = Polynomial::constant(1, Rational(coef(rng)));
        CauchyBinetExpansion cb = cauchy_binet_expand(a);
        Polynomial sum(1);
        for (const auto& minor : cb.row_minors) sum += minor * minor;
        CHECK(sum == cb.gram_determinant);
    }
}

TEST_CASE("smith normal form examples") {
    // already Smith
    MatrixPolynomial d = MatrixPolynomial::parse({{"t", "0"}, {"0", "t^3"}}, kT);
    SmithDecomposition s = smith_normal_form(d);
    CHECK(s.e * s.d * s.f == d);
    CHECK(s.d.at(0, 0) == P("t", kT));
    CHECK(s.d.at(1, 1) == P("t^3", kT));

    // gcd x, product x^3 - x^2
    MatrixPolynomial m = MatrixPolynomial::parse({{"t", "t"}, {"t", "t^2"}}, kT);
    SmithDecomposition s2 = smith_normal_form(m);
    CHECK(s2.e * s2.d * s2.f == m);
    CHECK(s2.d.at(0, 0) == P("t", kT));
    CHECK(s2.d.at(1, 1) == P("t^2 - t", kT));

    SmithDecomposition s3 = smith_normal_form(MatrixPolynomial::identity(3, 1));
    CHECK(s3.d == MatrixPolynomial::identity(3, 1));

    // zero matrix
    SmithDecomposition s4 = smith_normal_form(MatrixPolynomial(2, 2, 1));
    CHECK(s4.d.is_zero());
    CHECK(s4.e * s4.d * s4.f == MatrixPolynomial(2, 2, 1));
}

TEST_CASE("smith normal form on random univariate matrices") {
    std::mt19937_64 rng(4321);
    for (int it = 0; it < 40; ++it) {
        unsigned n = 1 + rng() % 3;
        MatrixPolynomial m = random_matrix_poly(rng, n, 1, 3, 3);
        SmithDecomposition s = smith_normal_form(m);
        CHECK(s.e * s.d * s.f == m);
        Polynomial de = determinant(s.e);
        Polynomial df = determinant(s.f);
        CHECK(de.degree() == 0);
        CHECK(df.degree() == 0);
        CHECK(!de.is_zero());
        CHECK(!df.is_zero());
        auto diag = s.diagonal();
        for (unsigned i = 0; i + 1 < n; ++i) {
            if (diag[i + 1].is_zero()) continue;
            CHECK(!diag[i].is_zero());
            CHECK(divide_univariate(diag[i + 1], diag[i]).remainder.is_zero());
        }
        for (const auto& p : diag)
            if (!p.is_zero()) CHECK(p.leading_coefficient() == 1);
        // off-diagonal clean
        CHECK(s.d.is_diagonal());
    }
}

TEST_CASE("block sequence") {
    auto one = Polynomial::constant(1, Rational(1));
    auto t2 = P("t^2", kT);
    auto t4 = P("t^4", kT);
    CHECK(block_sequence({one, t2, t2}) == std::vector<unsigned>{1, 2});
    CHECK(block_sequence({one}) == std::vector<unsigned>{1});
    CHECK(block_sequence({t2, t4}) == std::vector<unsigned>{1, 2});
    CHECK_THROWS(block_sequence({Polynomial(1)}));
    CHECK_THROWS(block_sequence({P("-t^2", kT)}));
}

TEST_CASE("unimodular inverse") {
    MatrixPolynomial f = MatrixPolynomial::parse({{"1", "t^2"}, {"0", "2"}}, kT);
    MatrixPolynomial inv = unimodular_inverse(f);
    CHECK(f * inv == MatrixPolynomial::identity(2, 1) * Rational(1));
    CHECK(inv * f == MatrixPolynomial::identity(2, 1) * Rational(1));
    MatrixPolynomial bad = MatrixPolynomial::parse({{"t", "0"}, {"0", "1"}}, kT);
    CHECK_THROWS(unimodular_inverse(bad));
}

TEST_CASE("matrix text round trip") {
    MatrixPolynomial m0 = choi_matrix(Rational(0));
    auto strings = matrix_to_strings(m0, kXYZ);
    CHECK(MatrixPolynomial::parse(strings, kXYZ) == m0);
}
