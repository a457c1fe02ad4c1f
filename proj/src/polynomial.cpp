#include "semicert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace semicert {

std::vector<MultiIndex> multi_indices_up_to(unsigned nvars, unsigned max_degree) {
    std::vector<MultiIndex> out;
    MultiIndex current(nvars, 0);
    // depth-first in lex order
    auto rec = [&](auto&& self, unsigned pos) -> void {
        if (pos == nvars) {
            out.push_back(current);
            return;
        }
        unsigned used = 0;
        for (unsigned i = 0; i < pos; ++i) used += current[i];
        for (unsigned e = 0; e + used <= max_degree; ++e) {
            current[pos] = e;
            self(self, pos + 1);
        }
        current[pos] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial Polynomial::constant(unsigned nvars, const Rational& c) {
    Polynomial p(nvars);
    p.add_term(MultiIndex(nvars, 0), c);
    return p;
}

Polynomial Polynomial::variable(unsigned nvars, unsigned index, unsigned power) {
    if (index >= nvars) throw std::invalid_argument("variable index out of range");
    MultiIndex e(nvars, 0);
    e[index] = power;
    Polynomial p(nvars);
    p.add_term(e, Rational(1));
    return p;
}

Polynomial Polynomial::monomial(const MultiIndex& exponents, const Rational& c) {
    Polynomial p(static_cast<unsigned>(exponents.size()));
    p.add_term(exponents, c);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(total_degree(e)));
    return d;
}

Rational Polynomial::coefficient(const MultiIndex& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(MultiIndex(nvars_, 0)); }

Rational Polynomial::leading_coefficient() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

void Polynomial::add_term(const MultiIndex& exponents, const Rational& c) {
    if (exponents.size() != nvars_) throw std::invalid_argument("multi-index length mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial r = *this;
    r += other;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial r = *this;
    r -= other;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("nvars mismatch in +");
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    if (nvars_ != other.nvars_) throw std::invalid_argument("nvars mismatch in -");
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (nvars_ != other.nvars_) throw std::invalid_argument("nvars mismatch in *");
    Polynomial r(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) r.add_term(add(ea, eb), ca * cb);
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
    *this = *this * other;
    return *this;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
    return r;
}

bool Polynomial::is_homogeneous(unsigned degree) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != degree) return false;
    return true;
}

bool Polynomial::is_univariate_in(unsigned index) const {
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && i != index) return false;
    return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (unsigned i = 0; i < nvars_; ++i)
            if (e[i]) term *= pow_rational(point[i], e[i]);
        acc += term;
    }
    return acc;
}

Form make_form(const Polynomial& p, unsigned degree) {
    if (!p.is_homogeneous(degree)) throw std::invalid_argument("polynomial is not a form of the declared degree");
    return Form{p, degree};
}

Polynomial partial_derivative(const Polynomial& p, const MultiIndex& alpha) {
    if (alpha.size() != p.nvars()) throw std::invalid_argument("multi-index length mismatch");
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (!divides(alpha, e)) continue;
        Rational coef = c;
        MultiIndex shifted = e;
        for (size_t i = 0; i < alpha.size(); ++i) {
            for (uint32_t k = 0; k < alpha[i]; ++k) coef *= Rational(static_cast<long>(e[i] - k));
            shifted[i] = e[i] - alpha[i];
        }
        r.add_term(shifted, coef);
    }
    return r;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& replacement) {
    if (replacement.size() != p.nvars()) throw std::invalid_argument("substitute: arity mismatch");
    unsigned out_vars = replacement.empty() ? 0 : replacement.front().nvars();
    for (const auto& r : replacement)
        if (r.nvars() != out_vars) throw std::invalid_argument("substitute: replacement nvars mismatch");
    Polynomial acc(out_vars);
    for (const auto& [e, c] : p.terms()) {
        Polynomial term = Polynomial::constant(out_vars, c);
        for (unsigned i = 0; i < p.nvars(); ++i)
            for (uint32_t k = 0; k < e[i]; ++k) term *= replacement[i];
        acc += term;
    }
    return acc;
}

Polynomial taylor_shift(const Polynomial& p, const std::vector<Rational>& x0,
                        const std::vector<int>& eps) {
    unsigned n = p.nvars();
    if (x0.size() != n || eps.size() != n) throw std::invalid_argument("taylor_shift: length mismatch");
    for (int e : eps)
        if (e != 1 && e != -1) throw std::invalid_argument("taylor_shift: eps entries must be +-1");
    Polynomial acc(n);
    int deg = p.degree();
    if (deg < 0) return acc;
    for (const MultiIndex& alpha : multi_indices_up_to(n, static_cast<unsigned>(deg))) {
        Rational value = partial_derivative(p, alpha).evaluate(x0);
        if (value == 0) continue;
        // (eps X)^alpha / alpha!
        Rational coef = value / Rational(multi_factorial(alpha));
        for (unsigned i = 0; i < n; ++i)
            if (eps[i] == -1 && alpha[i] % 2u) coef = -coef;
        acc.add_term(alpha, coef);
    }
    return acc;
}

Form homogenize(const Polynomial& p, unsigned d) {
    if (static_cast<int>(d) < p.degree()) throw std::invalid_argument("homogenize: d below degree");
    unsigned n = p.nvars();
    Polynomial r(n + 1);
    for (const auto& [e, c] : p.terms()) {
        MultiIndex ext(e.begin(), e.end());
        ext.push_back(d - total_degree(e));
        r.add_term(ext, c);
    }
    return Form{r, d};
}

Polynomial dehomogenize(const Polynomial& p, unsigned var) {
    unsigned n = p.nvars();
    if (var >= n) throw std::invalid_argument("dehomogenize: variable out of range");
    Polynomial r(n - 1);
    for (const auto& [e, c] : p.terms()) {
        MultiIndex shrunk;
        shrunk.reserve(n - 1);
        for (unsigned i = 0; i < n; ++i)
            if (i != var) shrunk.push_back(e[i]);
        r.add_term(shrunk, c);
    }
    return r;
}

std::optional<Polynomial> try_divide_exact(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("nvars mismatch in division");
    if (q.is_zero()) return std::nullopt;
    Polynomial rem = p;
    Polynomial quot(p.nvars());
    const auto& qlead = *q.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        if (!divides(qlead.first, rlead.first)) return std::nullopt;
        Polynomial t = Polynomial::monomial(subtract(rlead.first, qlead.first),
                                            rlead.second / qlead.second);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

static unsigned univariate_degree(const Polynomial& p) {
    return p.is_zero() ? 0 : p.terms().rbegin()->first[0];
}

DivMod divide_univariate(const Polynomial& p, const Polynomial& d) {
    if (p.nvars() != 1 || d.nvars() != 1) throw std::invalid_argument("divide_univariate: nvars != 1");
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial rem = p;
    Polynomial quot(1);
    unsigned dd = univariate_degree(d);
    Rational dlc = d.leading_coefficient();
    while (!rem.is_zero() && univariate_degree(rem) >= dd) {
        unsigned shift = univariate_degree(rem) - dd;
        Polynomial t = Polynomial::monomial(MultiIndex{shift}, rem.leading_coefficient() / dlc);
        quot += t;
        rem -= t * d;
    }
    return DivMod{quot, rem};
}

static Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

Polynomial univariate_gcd(const Polynomial& p, const Polynomial& q) {
    if (p.nvars() != 1 || q.nvars() != 1) throw std::invalid_argument("univariate_gcd: nvars != 1");
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    Polynomial a = p, b = q;
    while (!b.is_zero()) {
        Polynomial r = divide_univariate(a, b).remainder;
        a = b;
        b = r;
    }
    return make_monic(a);
}

Polynomial squarefree_part(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("squarefree_part: nvars != 1");
    if (p.is_zero()) throw std::domain_error("squarefree_part of zero");
    if (univariate_degree(p) == 0) return Polynomial::constant(1, Rational(1));
    Polynomial g = univariate_gcd(p, partial_derivative(p, MultiIndex{1}));
    auto quotient = try_divide_exact(p, g);
    return make_monic(*quotient);
}

SquarefreeDecomposition squarefree_decomposition(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("squarefree_decomposition: nvars != 1");
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition of zero");
    SquarefreeDecomposition out;
    out.leading = p.leading_coefficient();
    out.factors.push_back(Polynomial::constant(1, Rational(1)));  // index 0, unused
    Polynomial f = make_monic(p);
    if (univariate_degree(f) == 0) return out;
    // Yun's algorithm
    Polynomial fp = partial_derivative(f, MultiIndex{1});
    Polynomial a = univariate_gcd(f, fp);
    Polynomial b = *try_divide_exact(f, a);
    Polynomial c = *try_divide_exact(fp, a);
    Polynomial d = c - partial_derivative(b, MultiIndex{1});
    while (univariate_degree(b) > 0) {
        Polynomial fk = univariate_gcd(b, d);  // d == 0 yields monic b
        out.factors.push_back(fk);
        b = *try_divide_exact(b, fk);
        c = *try_divide_exact(d, fk);
        d = c - partial_derivative(b, MultiIndex{1});
    }
    return out;
}

// ---- text form ----

static void print_monomial(std::ostringstream& os, const MultiIndex& e,
                           const std::vector<std::string>& names, bool lead_star) {
    bool first = !lead_star;
    for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << names[i];
        if (e[i] > 1) os << "^" << e[i];
    }
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& var_names) {
    if (var_names.size() != p.nvars()) throw std::invalid_argument("to_string: names/arity mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // descending lex
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = total_degree(e) > 0;
        if (!has_vars) {
            os << to_string(a);
        } else if (a == 1) {
            print_monomial(os, e, var_names, false);
        } else {
            os << to_string(a);
            print_monomial(os, e, var_names, true);
        }
    }
    return os.str();
}

namespace {

struct PolyParser {
    const std::string& text;
    size_t pos = 0;
    const std::vector<std::string>& names;
    unsigned nvars;

    PolyParser(const std::string& t, const std::vector<std::string>& n)
        : text(t), names(n), nvars(static_cast<unsigned>(n.size())) {}

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_space();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) +
                                    ": " + what);
    }

    std::optional<unsigned> try_variable() {
        skip_space();
        size_t best_len = 0;
        unsigned best = 0;
        for (unsigned i = 0; i < nvars; ++i) {
            const std::string& nm = names[i];
            if (nm.size() > best_len && text.compare(pos, nm.size(), nm) == 0) {
                best_len = nm.size();
                best = i;
            }
        }
        if (best_len == 0) return std::nullopt;
        pos += best_len;
        return best;
    }

    std::optional<Rational> try_number() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        std::string num = text.substr(start, pos - start);
        skip_space();
        if (pos < text.size() && text[pos] == '/') {
            size_t save = pos;
            ++pos;
            skip_space();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) {
                pos = save;  // trailing '/' belongs to something else
                return parse_rational(num);
            }
            return parse_rational(num + "/" + text.substr(dstart, pos - dstart));
        }
        return parse_rational(num);
    }

    unsigned parse_exponent() {
        skip_space();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected exponent");
        return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
    }

    // term := [number] { '*' factor | factor }* where factor := var ['^' int]
    Polynomial parse_term() {
        Rational coef(1);
        MultiIndex e(nvars, 0);
        bool any = false;
        if (auto num = try_number()) {
            coef = *num;
            any = true;
        }
        while (true) {
            size_t save = pos;
            bool starred = eat('*');
            if (auto v = try_variable()) {
                unsigned exp = 1;
                if (eat('^')) exp = parse_exponent();
                e[*v] += exp;
                any = true;
            } else if (auto num = starred ? try_number() : std::nullopt) {
                coef *= *num;  // allow forms like "2*3" or "x*2"
            } else {
                pos = save;
                break;
            }
        }
        if (!any) fail("expected term");
        return Polynomial::monomial(e, coef);
    }

    Polynomial parse() {
        Polynomial acc(nvars);
        skip_space();
        bool negative = false;
        if (eat('-'))
            negative = true;
        else
            eat('+');
        while (true) {
            Polynomial t = parse_term();
            acc += negative ? -t : t;
            skip_space();
            if (eat('-'))
                negative = true;
            else if (eat('+'))
                negative = false;
            else
                break;
        }
        skip_space();
        if (pos != text.size()) fail("trailing input");
        return acc;
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& var_names) {
    std::string trimmed = text;
    PolyParser parser(trimmed, var_names);
    {
        // "0" must parse to the empty polynomial
        size_t b = text.find_first_not_of(" \t");
        if (b != std::string::npos) {
            size_t e = text.find_last_not_of(" \t");
            if (text.substr(b, e - b + 1) == "0") return Polynomial(static_cast<unsigned>(var_names.size()));
        }
    }
    return parser.parse();
}

}  // namespace semicert
