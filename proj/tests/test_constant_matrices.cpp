#include <doctest.h>

#include <random>

#include "semicert/rational_matrix.hpp"
#include "semicert/univariate_roots.hpp"

using namespace semicert;

namespace {

RationalMatrix sym(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Rational>> r;
    for (const auto& row : rows) {
        std::vector<Rational> rr;
        for (long v : row) rr.push_back(Rational(v));
        r.push_back(rr);
    }
    return RationalMatrix::from_rows(r);
}

}  // namespace

TEST_CASE("psd_constant examples") {
    CHECK(psd_constant(sym({{4, 0}, {0, 0}})));
    CHECK(!psd_constant(sym({{1, 2}, {2, 1}})));
    CHECK(psd_constant(sym({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})));
    CHECK(pd_constant(sym({{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}})));
    CHECK(!pd_constant(sym({{4, 0}, {0, 0}})));
    CHECK_THROWS(psd_constant(sym({{0, 1}, {0, 0}})));
}

TEST_CASE("characteristic polynomial") {
    RationalMatrix q = sym({{2, 1}, {1, 2}});
    Polynomial chi = characteristic_polynomial(q);
    // (l-1)(l-3) = l^2 - 4l + 3
    CHECK(chi == parse_polynomial("t^2 - 4*t + 3", {"t"}));
}

TEST_CASE("psd agrees with principal-minor oracle") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int it = 0; it < 200; ++it) {
        unsigned n = 1 + rng() % 4;
        RationalMatrix q(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                q.at(i, j) = make_rational(coef(rng), 1 + (it % 2));
                q.at(j, i) = q.at(i, j);
            }
        CHECK(psd_constant(q) == psd_by_principal_minors(q));
    }
}

TEST_CASE("psd violation witness is concrete") {
    std::mt19937_64 rng(556);
    std::uniform_int_distribution<int> coef(-4, 4);
    int nontrivial = 0;
    for (int it = 0; it < 200; ++it) {
        unsigned n = 1 + rng() % 4;
        RationalMatrix q(n, n);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i; j < n; ++j) {
                q.at(i, j) = Rational(coef(rng));
                q.at(j, i) = q.at(i, j);
            }
        auto w = psd_violation_witness(q);
        if (psd_constant(q)) {
            CHECK(!w.has_value());
        } else {
            REQUIRE(w.has_value());
            ++nontrivial;
            Rational quad(0);
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) quad += (*w)[i] * q.at(i, j) * (*w)[j];
            CHECK(quad < 0);
        }
    }
    CHECK(nontrivial > 20);
}

TEST_CASE("pd margin") {
    RationalMatrix q = sym({{3, 1}, {1, 3}});
    Rational mu = pd_diagonal_margin(q);
    CHECK(mu > 0);
    RationalMatrix shifted = q;
    shifted.at(0, 0) -= mu;
    shifted.at(1, 1) -= mu;
    CHECK(psd_constant(shifted));
}

TEST_CASE("psd_univariate_scalar examples") {
    auto X = std::vector<std::string>{"x"};
    CHECK(psd_univariate_scalar(parse_polynomial("18*x^2 + 9*x + 5", X)));
    CHECK(psd_univariate_scalar(parse_polynomial("x^2", X)));
    CHECK(!psd_univariate_scalar(parse_polynomial("x^3", X)));
    CHECK(psd_univariate_scalar(Polynomial(1)));
    CHECK(!psd_univariate_scalar(parse_polynomial("-x^2", X)));
    CHECK(psd_univariate_scalar(parse_polynomial("x^2 - 2*x + 1", X)));   // (x-1)^2
    CHECK(!psd_univariate_scalar(parse_polynomial("x^2 - 1", X)));
    // (x-1)^2 (x-2)^2 touches zero twice, still psd
    Polynomial p = parse_polynomial("x^2-2*x+1", X) * parse_polynomial("x^2-4*x+4", X);
    CHECK(psd_univariate_scalar(p));
    // odd multiplicity inside even-degree positive-leading polynomial
    Polynomial q = parse_polynomial("x^2-2*x+1", X) * parse_polynomial("x", X) *
                   parse_polynomial("x-3", X);
    CHECK(!psd_univariate_scalar(q));
}

TEST_CASE("psd decision against explicit negative witnesses") {
    std::mt19937_64 rng(7777);
    std::uniform_int_distribution<int> coef(-6, 6);
    auto X = std::vector<std::string>{"x"};
    int negatives = 0;
    for (int it = 0; it < 120; ++it) {
        Polynomial p(1);
        unsigned deg = 1 + rng() % 8;
        for (unsigned k = 0; k <= deg; ++k) p.add_term(MultiIndex{k}, Rational(coef(rng)));
        if (p.is_zero()) continue;
        bool psd = psd_univariate_scalar(p);
        auto wit = negative_value_witness(p);
        if (psd) {
            CHECK(!wit.has_value());
            // dense sampling cross-check
            for (int s = -50; s <= 50; ++s)
                CHECK(p.evaluate({make_rational(s, 10)}) >= 0);
        } else {
            REQUIRE(wit.has_value());
            CHECK(p.evaluate({*wit}) < 0);
            ++negatives;
        }
    }
    CHECK(negatives > 30);
}

TEST_CASE("root isolation and counting") {
    auto X = std::vector<std::string>{"x"};
    Polynomial p = parse_polynomial("x^2 - 2", X);
    CHECK(count_real_roots(p) == 2);
    auto roots = isolate_real_roots(p, make_rational(1, 1 << 20));
    REQUIRE(roots.size() == 2);
    for (const auto& iv : roots) {
        CHECK(iv.hi - iv.lo <= make_rational(1, 1 << 20));
        CHECK(sign(p.evaluate({iv.lo})) * sign(p.evaluate({iv.hi})) < 0);
    }
    // double root not seen by the squarefree part twice
    Polynomial dbl = parse_polynomial("x^2-2*x+1", X);
    CHECK(count_real_roots(dbl) == 1);
    CHECK(count_real_roots(parse_polynomial("x^2+1", X)) == 0);
    CHECK(count_real_roots(parse_polynomial("x^3-x", X), Rational(-2), Rational(0)) == 2);
}
