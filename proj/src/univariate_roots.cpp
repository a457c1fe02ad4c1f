#include "semicert/univariate_roots.hpp"

#include <stdexcept>

namespace semicert {

namespace {

unsigned udeg(const Polynomial& p) { return p.is_zero() ? 0u : p.terms().rbegin()->first[0]; }

int count_variations(const std::vector<int>& signs) {
    int count = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++count;
        last = s;
    }
    return count;
}

}  // namespace

SturmSequence sturm_sequence(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("sturm_sequence: nvars != 1");
    SturmSequence s;
    if (p.is_zero()) return s;
    s.chain.push_back(p);
    Polynomial dp = partial_derivative(p, MultiIndex{1});
    if (dp.is_zero()) return s;
    s.chain.push_back(dp);
    while (true) {
        const Polynomial& a = s.chain[s.chain.size() - 2];
        const Polynomial& b = s.chain.back();
        Polynomial r = divide_univariate(a, b).remainder;
        if (r.is_zero()) break;
        s.chain.push_back(-r);
    }
    return s;
}

int SturmSequence::variations_at(const Rational& x) const {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sign(p.evaluate({x})));
    return count_variations(signs);
}

int SturmSequence::variations_at_plus_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain) signs.push_back(sign(p.leading_coefficient()));
    return count_variations(signs);
}

int SturmSequence::variations_at_minus_infinity() const {
    std::vector<int> signs;
    for (const auto& p : chain) {
        int s = sign(p.leading_coefficient());
        if (udeg(p) % 2u) s = -s;
        signs.push_back(s);
    }
    return count_variations(signs);
}

int count_real_roots(const Polynomial& p, const Rational& a, const Rational& b) {
    Polynomial sf = squarefree_part(p);
    SturmSequence s = sturm_sequence(sf);
    if (s.chain.empty()) throw std::domain_error("count_real_roots of zero polynomial");
    return s.variations_at(a) - s.variations_at(b);
}

int count_real_roots(const Polynomial& p) {
    Polynomial sf = squarefree_part(p);
    if (udeg(sf) == 0) return 0;
    SturmSequence s = sturm_sequence(sf);
    return s.variations_at_minus_infinity() - s.variations_at_plus_infinity();
}

Rational cauchy_root_bound(const Polynomial& p) {
    if (p.is_zero()) throw std::domain_error("root bound of zero polynomial");
    Rational lc = abs_value(p.leading_coefficient());
    Rational best(0);
    for (const auto& [e, c] : p.terms()) {
        if (e[0] == udeg(p)) continue;
        Rational v = abs_value(c) / lc;
        if (v > best) best = v;
    }
    return best + 1;
}

std::vector<RootInterval> isolate_real_roots(const Polynomial& p, const Rational& width) {
    if (p.nvars() != 1) throw std::invalid_argument("isolate_real_roots: nvars != 1");
    if (p.is_zero()) throw std::domain_error("isolate_real_roots of zero polynomial");
    Polynomial sf = squarefree_part(p);
    std::vector<RootInterval> out;
    if (udeg(sf) == 0) return out;
    SturmSequence s = sturm_sequence(sf);
    Rational bound = cauchy_root_bound(sf);
    struct Segment {
        Rational lo, hi;
        int vlo, vhi;
    };
    // Endpoints are kept off the roots, so every produced interval contains
    // its root strictly inside and the endpoints have opposite signs of sf.
    auto split_point = [&](const Rational& lo, const Rational& hi) {
        Rational mid = (lo + hi) / 2;
        Rational step = (hi - lo) / 4;
        while (sf.evaluate({mid}) == 0) {
            mid += step;
            step /= 2;
        }
        return mid;
    };
    std::vector<Segment> stack = {{-bound, bound, s.variations_at(-bound), s.variations_at(bound)}};
    while (!stack.empty()) {
        Segment seg = stack.back();
        stack.pop_back();
        int roots = seg.vlo - seg.vhi;
        if (roots == 0) continue;
        if (roots == 1 && seg.hi - seg.lo <= width) {
            out.push_back(RootInterval{seg.lo, seg.hi});
            continue;
        }
        Rational mid = split_point(seg.lo, seg.hi);
        int vmid = s.variations_at(mid);
        stack.push_back(Segment{seg.lo, mid, seg.vlo, vmid});
        stack.push_back(Segment{mid, seg.hi, vmid, seg.vhi});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) {
        return a.lo < b.lo;
    });
    return out;
}

bool psd_univariate_scalar(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("psd_univariate_scalar: nvars != 1");
    if (p.is_zero()) return true;
    if (udeg(p) % 2u) return false;
    if (p.leading_coefficient() < 0) return false;
    if (udeg(p) == 0) return p.constant_term() >= 0;
    // nonnegative iff no real root of odd multiplicity
    auto dec = squarefree_decomposition(p);
    Polynomial odd_part = Polynomial::constant(1, Rational(1));
    for (size_t k = 1; k < dec.factors.size(); ++k)
        if (k % 2u) odd_part *= dec.factors[k];
    if (udeg(odd_part) == 0) return true;
    return count_real_roots(odd_part) == 0;
}

std::optional<Rational> negative_value_witness(const Polynomial& p) {
    if (p.nvars() != 1) throw std::invalid_argument("negative_value_witness: nvars != 1");
    if (p.is_zero()) return std::nullopt;
    Rational bound = cauchy_root_bound(p);
    // beyond all roots the sign is decided by the leading term
    if (udeg(p) % 2u || p.leading_coefficient() < 0) {
        if (p.evaluate({bound}) < 0) return bound;
        return -bound;
    }
    if (p.evaluate({Rational(0)}) < 0) return Rational(0);
    if (udeg(p) == 0) return std::nullopt;
    // p has constant sign strictly between consecutive distinct roots; the
    // isolating intervals keep roots off their endpoints, so one probe per
    // gap covers every sign region.
    auto intervals = isolate_real_roots(p, make_rational(1, 1024));
    std::vector<Rational> probes;
    if (!intervals.empty()) {
        probes.push_back(intervals.front().lo - 1);
        for (size_t j = 0; j + 1 < intervals.size(); ++j)
            probes.push_back((intervals[j].hi + intervals[j + 1].lo) / 2);
        probes.push_back(intervals.back().hi + 1);
    }
    for (const Rational& t : probes)
        if (p.evaluate({t}) < 0) return t;
    return std::nullopt;
}

}  // namespace semicert
