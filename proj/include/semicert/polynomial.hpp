#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "semicert/multiindex.hpp"
#include "semicert/rational.hpp"

namespace semicert {

// Sparse multivariate polynomial over Q. Terms are kept in a lex-ordered map
// with no stored zero coefficients; all arithmetic is exact.
class Polynomial {
  public:
    using TermMap = std::map<MultiIndex, Rational>;

    explicit Polynomial(unsigned nvars = 1) : nvars_(nvars) {}

    static Polynomial constant(unsigned nvars, const Rational& c);
    static Polynomial variable(unsigned nvars, unsigned index, unsigned power = 1);
    static Polynomial monomial(const MultiIndex& exponents, const Rational& c);

    unsigned nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree of the zero polynomial is -1 by convention.
    int degree() const;
    Rational coefficient(const MultiIndex& exponents) const;
    Rational constant_term() const;
    Rational leading_coefficient() const;  // coefficient of the lex-largest term

    void add_term(const MultiIndex& exponents, const Rational& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial operator*(const Rational& c) const;

    bool operator==(const Polynomial& other) const = default;

    bool is_homogeneous(unsigned degree) const;
    bool is_univariate_in(unsigned index) const;

    Rational evaluate(const std::vector<Rational>& point) const;

  private:
    unsigned nvars_;
    TermMap terms_;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

// A homogeneous polynomial with its declared degree; construction checks
// homogeneity rather than assuming it.
struct Form {
    Polynomial poly;
    unsigned degree = 0;
};

Form make_form(const Polynomial& p, unsigned degree);

// d^alpha p (exact).
Polynomial partial_derivative(const Polynomial& p, const MultiIndex& alpha);

// Substitute variable i by replacement[i]; all replacements share one
// variable count, which becomes the result's.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& replacement);

// q(X) = p(x0 + eps*X) via the Taylor formula with exact 1/alpha! factors.
// eps entries must be +1 or -1.
Polynomial taylor_shift(const Polynomial& p, const std::vector<Rational>& x0,
                        const std::vector<int>& eps);

// Appends one fresh variable and pads every term up to total degree d.
Form homogenize(const Polynomial& p, unsigned d);

// Sets variable `var` to 1 and removes that variable slot.
Polynomial dehomogenize(const Polynomial& p, unsigned var);

// Exact quotient when q divides p in Q[x]; nullopt otherwise.
std::optional<Polynomial> try_divide_exact(const Polynomial& p, const Polynomial& q);

// ---- univariate helpers (nvars == 1 required) ----

// Euclidean division p = q*d + r with deg r < deg d.
struct DivMod {
    Polynomial quotient;
    Polynomial remainder;
};
DivMod divide_univariate(const Polynomial& p, const Polynomial& d);

// Monic gcd; gcd(p, 0) is p normalized monic. Both zero is an error.
Polynomial univariate_gcd(const Polynomial& p, const Polynomial& q);

// p / gcd(p, p'), normalized monic.
Polynomial squarefree_part(const Polynomial& p);

// Yun decomposition: p = lc * prod_k f_k^k with the f_k monic, squarefree,
// pairwise coprime. Entry k of the result holds f_k (index 0 unused).
struct SquarefreeDecomposition {
    Rational leading;
    std::vector<Polynomial> factors;  // factors[k] has multiplicity k
};
SquarefreeDecomposition squarefree_decomposition(const Polynomial& p);

// ---- text form ----
// Canonical grammar: signed sum of `c * x1^e1*...*xn^en` terms, rational
// coefficients as `p/q`. print/parse round-trip exactly.
std::string to_string(const Polynomial& p, const std::vector<std::string>& var_names);
Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& var_names);

}  // namespace semicert
