#include "semicert/verifier.hpp"

#include <random>
#include <sstream>

namespace semicert {

bool psd_univariate_matrix(const MatrixPolynomial& a) {
    if (!a.is_symmetric()) throw std::invalid_argument("psd_univariate_matrix: not symmetric");
    if (a.nvars() != 1) throw std::invalid_argument("psd_univariate_matrix: nvars != 1");
    unsigned m = a.size();
    if (m > 4) throw std::invalid_argument("psd_univariate_matrix: size limited to 4");
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        std::vector<unsigned> idx;
        for (unsigned i = 0; i < m; ++i)
            if (mask & (1u << i)) idx.push_back(i);
        if (!psd_univariate_scalar(principal_minor(a, idx))) return false;
    }
    return true;
}

namespace {

Rational random_coordinate(std::mt19937_64& rng, const Rational& lo, const Rational& hi) {
    // 1/128 granularity inside [lo, hi]
    unsigned steps = 128;
    unsigned pick = static_cast<unsigned>(rng() % (steps + 1));
    return lo + (hi - lo) * make_rational(static_cast<long>(pick), static_cast<long>(steps));
}

std::vector<Rational> random_point_in_box(
    std::mt19937_64& rng, unsigned nvars,
    const std::optional<std::vector<std::pair<Rational, Rational>>>& box) {
    std::vector<Rational> pt(nvars);
    for (unsigned i = 0; i < nvars; ++i) {
        Rational lo(-1), hi(1);
        if (box) {
            lo = (*box)[i].first;
            hi = (*box)[i].second;
        }
        pt[i] = random_coordinate(rng, lo, hi);
    }
    return pt;
}

}  // namespace

SampleOutcome sample_nonneg(const Polynomial& f, const SemiAlgebraicPiece& piece, unsigned n,
                            uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample_nonneg: need at least one sample");
    unsigned nvars = f.nvars();
    if (piece.sampling_box && piece.sampling_box->size() != nvars)
        throw std::invalid_argument("sample_nonneg: sampling box arity mismatch");
    std::mt19937_64 rng(seed);
    SampleOutcome out{SampleOutcome::Kind::NoCounterexample, {}, 0};
    uint64_t attempts_left = static_cast<uint64_t>(n) * 100;
    while (out.accepted < n && attempts_left > 0) {
        --attempts_left;
        auto pt = random_point_in_box(rng, nvars, piece.sampling_box);
        if (!piece.contains(pt)) continue;
        ++out.accepted;
        if (f.evaluate(pt) < 0) {
            out.kind = SampleOutcome::Kind::Witness;
            out.witness = pt;
            return out;
        }
    }
    if (out.accepted == 0) out.kind = SampleOutcome::Kind::PieceLooksEmpty;
    return out;
}

std::optional<MatrixMismatch> find_matrix_mismatch(const MatrixPolynomial& a,
                                                   const MatrixPolynomial& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.nvars() != b.nvars())
        throw std::invalid_argument("find_matrix_mismatch: shape mismatch");
    // locate a differing entry
    unsigned row = 0, col = 0;
    Polynomial diff(a.nvars());
    bool found = false;
    for (unsigned i = 0; i < a.rows() && !found; ++i)
        for (unsigned j = 0; j < a.cols() && !found; ++j) {
            diff = a.at(i, j) - b.at(i, j);
            if (!diff.is_zero()) {
                row = i;
                col = j;
                found = true;
            }
        }
    if (!found) return std::nullopt;
    unsigned nvars = a.nvars();
    // random probes first, then a full grid scan bounded by the degree
    std::mt19937_64 rng(0xd1ffULL);
    for (int it = 0; it < 64; ++it) {
        std::vector<Rational> pt(nvars);
        for (auto& c : pt) c = make_rational(static_cast<long>(rng() % 2001) - 1000, 64);
        if (diff.evaluate(pt) != 0)
            return MatrixMismatch{pt, row, col, a.at(row, col).evaluate(pt),
                                  b.at(row, col).evaluate(pt)};
    }
    unsigned d = static_cast<unsigned>(diff.degree());
    std::vector<Rational> pt(nvars, Rational(0));
    std::vector<unsigned> idx(nvars, 0);
    while (true) {
        for (unsigned i = 0; i < nvars; ++i) pt[i] = Rational(static_cast<long>(idx[i]));
        if (diff.evaluate(pt) != 0)
            return MatrixMismatch{pt, row, col, a.at(row, col).evaluate(pt),
                                  b.at(row, col).evaluate(pt)};
        unsigned k = 0;
        while (k < nvars && idx[k] == d + 1) idx[k++] = 0;
        if (k == nvars) break;
        ++idx[k];
        for (unsigned i = 0; i < k; ++i) idx[i] = 0;
    }
    throw std::logic_error("nonzero polynomial vanished on a full degree grid");
}

namespace {

Polynomial sos_value(const SosProof& proof, unsigned nvars) {
    Polynomial acc(nvars);
    for (const auto& [c, s] : proof.squares) acc += (s * s) * c;
    return acc;
}

WeightStatus check_weight(const Polynomial& weight, const WeightProof& proof,
                          const SemiAlgebraicPiece& piece, const VerifyOptions& options) {
    WeightStatus st;
    if (const auto* sos = std::get_if<SosProof>(&proof)) {
        for (const auto& [c, s] : sos->squares)
            if (c < 0) {
                st.kind = WeightStatus::Kind::Failed;
                st.detail = "sos proof has a negative scale";
                return st;
            }
        if (sos_value(*sos, weight.nvars()) == weight) {
            st.kind = WeightStatus::Kind::ProvedExact;
        } else {
            st.kind = WeightStatus::Kind::Failed;
            st.detail = "sos proof does not reconstruct the weight";
        }
        return st;
    }
    if (const auto* cone = std::get_if<ConeProof>(&proof)) {
        Polynomial acc(weight.nvars());
        for (const auto& atom : cone->atoms) {
            if (atom.generator >= piece.constraints.size()) {
                st.kind = WeightStatus::Kind::Failed;
                st.detail = "cone proof references a missing generator";
                return st;
            }
            if (atom.scale < 0) {
                st.kind = WeightStatus::Kind::Failed;
                st.detail = "cone proof has a negative scale";
                return st;
            }
            acc += (atom.monomial * atom.monomial) * atom.scale * piece.constraints[atom.generator];
        }
        acc += sos_value(cone->remainder, weight.nvars());
        for (const auto& [c, s] : cone->remainder.squares)
            if (c < 0) {
                st.kind = WeightStatus::Kind::Failed;
                st.detail = "cone remainder has a negative scale";
                return st;
            }
        if (acc == weight) {
            st.kind = WeightStatus::Kind::ProvedExact;
        } else {
            st.kind = WeightStatus::Kind::Failed;
            st.detail = "cone combination does not reconstruct the weight";
        }
        return st;
    }
    const auto& sampled = std::get<SampledProof>(proof);
    unsigned n = sampled.samples ? sampled.samples : options.samples;
    SampleOutcome outcome = sample_nonneg(weight, piece, n, sampled.seed ^ options.seed);
    st.samples = outcome.accepted;
    switch (outcome.kind) {
        case SampleOutcome::Kind::NoCounterexample:
            st.kind = WeightStatus::Kind::SampledOnly;
            break;
        case SampleOutcome::Kind::Witness:
            st.kind = WeightStatus::Kind::Failed;
            st.detail = "weight negative at a sampled point of the piece";
            st.witness = outcome.witness;
            break;
        case SampleOutcome::Kind::PieceLooksEmpty:
            st.kind = WeightStatus::Kind::SampledOnly;
            st.detail = "piece produced no samples (possibly empty)";
            break;
    }
    return st;
}

WeightStatus check_factor(const TermFactor& factor) {
    WeightStatus st;
    st.kind = WeightStatus::Kind::ProvedExact;
    if (const auto* sq = std::get_if<HermitianSquareFactor>(&factor)) {
        if (sq->gram) {
            if (!sq->gram->is_symmetric() || sq->gram->rows() != sq->u.rows()) {
                st.kind = WeightStatus::Kind::Failed;
                st.detail = "gram matrix shape mismatch";
                return st;
            }
            if (!psd_constant(*sq->gram)) {
                st.kind = WeightStatus::Kind::Failed;
                st.detail = "gram matrix is not psd";
                auto w = psd_violation_witness(*sq->gram);
                if (w) st.witness = *w;
            }
        }
        return st;
    }
    const auto& p = std::get<UnivariatePsdFactor>(factor).p;
    if (!p.is_symmetric() || p.nvars() != 1 || p.size() > 4) {
        st.kind = WeightStatus::Kind::Failed;
        st.detail = "univariate psd factor must be symmetric, univariate, size <= 4";
        return st;
    }
    if (!psd_univariate_matrix(p)) {
        st.kind = WeightStatus::Kind::Failed;
        st.detail = "matrix polynomial is not psd on R";
    }
    return st;
}

}  // namespace

bool VerificationReport::identities_exact() const {
    for (const auto& s : identity_status)
        if (!s.exact) return false;
    return true;
}

bool VerificationReport::weights_ok() const {
    for (const auto& piece : weight_status)
        for (const auto& w : piece)
            if (w.kind == WeightStatus::Kind::Failed) return false;
    return true;
}

bool VerificationReport::pass(bool require_covering) const {
    if (!identities_exact() || !weights_ok()) return false;
    if (require_covering && covering_status.checked && covering_status.uncovered) return false;
    return true;
}

std::string VerificationReport::summary() const {
    std::ostringstream os;
    for (size_t i = 0; i < identity_status.size(); ++i) {
        const auto& id = identity_status[i];
        os << "piece " << i << ": identity " << (id.exact ? "exact" : "FAILED");
        if (!id.exact)
            os << " (entry " << id.row << "," << id.col << ")";
        unsigned proved = 0, sampled = 0, failed = 0;
        for (const auto& w : weight_status[i]) {
            switch (w.kind) {
                case WeightStatus::Kind::ProvedExact: ++proved; break;
                case WeightStatus::Kind::SampledOnly: ++sampled; break;
                case WeightStatus::Kind::Failed: ++failed; break;
            }
        }
        os << "; weights proved=" << proved << " sampled=" << sampled << " failed=" << failed
           << "\n";
    }
    if (covering_status.checked) {
        os << "covering: sampled " << covering_status.samples << " points, "
           << (covering_status.uncovered ? "UNCOVERED point found" : "all covered") << "\n";
    }
    return os.str();
}

VerificationReport verify_certificate(const PiecewiseCertificate& cert,
                                      const VerifyOptions& options) {
    VerificationReport report;
    unsigned nvars = cert.target.nvars();
    for (size_t pi = 0; pi < cert.pieces.size(); ++pi) {
        const auto& [piece, terms] = cert.pieces[pi];
        IdentityStatus id;
        MatrixPolynomial sum = piece_sum(cert, pi);
        if (sum == cert.target) {
            id.exact = true;
        } else {
            id.exact = false;
            if (auto mm = find_matrix_mismatch(sum, cert.target)) {
                id.witness = mm->point;
                id.row = mm->row;
                id.col = mm->col;
                id.lhs = mm->lhs;
                id.rhs = mm->rhs;
            }
        }
        report.identity_status.push_back(std::move(id));

        std::vector<WeightStatus> stats;
        for (const auto& term : terms) {
            WeightStatus ws = check_weight(term.weight, term.proof, piece, options);
            WeightStatus fs = check_factor(term.factor);
            if (fs.kind == WeightStatus::Kind::Failed) {
                stats.push_back(fs);
            } else {
                stats.push_back(ws);
            }
        }
        report.weight_status.push_back(std::move(stats));
    }

    if (options.check_covering) {
        report.covering_status.checked = true;
        std::mt19937_64 rng(options.seed ^ 0xc0feULL);
        unsigned n = options.covering_samples;
        report.covering_status.samples = n;
        for (unsigned s = 0; s < n; ++s) {
            std::vector<Rational> pt(nvars);
            for (auto& c : pt) c = make_rational(static_cast<long>(rng() % 257) - 128, 128);
            bool covered = false;
            for (const auto& [piece, terms] : cert.pieces)
                if (piece.contains(pt)) {
                    covered = true;
                    break;
                }
            if (!covered) {
                report.covering_status.uncovered = pt;
                break;
            }
        }
    }
    return report;
}

}  // namespace semicert
