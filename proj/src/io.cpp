#include "semicert/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace semicert {

using nlohmann::json;

namespace {

json matrix_to_json(const MatrixPolynomial& m, const std::vector<std::string>& vars) {
    json rows = json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j), vars));
        rows.push_back(row);
    }
    return rows;
}

MatrixPolynomial matrix_from_json(const json& rows, const std::vector<std::string>& vars) {
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : rows) {
        std::vector<std::string> r;
        for (const auto& cell : row) r.push_back(cell.get<std::string>());
        grid.push_back(std::move(r));
    }
    return MatrixPolynomial::parse(grid, vars);
}

json rational_matrix_to_json(const RationalMatrix& m) {
    json rows = json::array();
    for (unsigned i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (unsigned j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

RationalMatrix rational_matrix_from_json(const json& rows) {
    std::vector<std::vector<Rational>> grid;
    for (const auto& row : rows) {
        std::vector<Rational> r;
        for (const auto& cell : row) r.push_back(parse_rational(cell.get<std::string>()));
        grid.push_back(std::move(r));
    }
    return RationalMatrix::from_rows(grid);
}

json sos_to_json(const SosProof& p, const std::vector<std::string>& vars) {
    json squares = json::array();
    for (const auto& [c, s] : p.squares) squares.push_back({to_string(c), to_string(s, vars)});
    return squares;
}

SosProof sos_from_json(const json& squares, const std::vector<std::string>& vars) {
    SosProof p;
    for (const auto& pair : squares)
        p.squares.emplace_back(parse_rational(pair.at(0).get<std::string>()),
                               parse_polynomial(pair.at(1).get<std::string>(), vars));
    return p;
}

json proof_to_json(const WeightProof& proof, const std::vector<std::string>& vars) {
    json j;
    if (const auto* sos = std::get_if<SosProof>(&proof)) {
        j["type"] = "sos";
        j["squares"] = sos_to_json(*sos, vars);
    } else if (const auto* cone = std::get_if<ConeProof>(&proof)) {
        j["type"] = "cone";
        json atoms = json::array();
        for (const auto& a : cone->atoms)
            atoms.push_back({{"scale", to_string(a.scale)},
                             {"monomial", to_string(a.monomial, vars)},
                             {"generator", a.generator}});
        j["atoms"] = atoms;
        j["remainder"] = sos_to_json(cone->remainder, vars);
    } else {
        const auto& sampled = std::get<SampledProof>(proof);
        j["type"] = "sampled";
        j["samples"] = sampled.samples;
        j["seed"] = sampled.seed;
    }
    return j;
}

WeightProof proof_from_json(const json& j, const std::vector<std::string>& vars) {
    std::string type = j.at("type").get<std::string>();
    if (type == "sos") return sos_from_json(j.at("squares"), vars);
    if (type == "cone") {
        ConeProof cone;
        for (const auto& a : j.at("atoms"))
            cone.atoms.push_back(ConeProof::Atom{parse_rational(a.at("scale").get<std::string>()),
                                                 parse_polynomial(a.at("monomial").get<std::string>(), vars),
                                                 a.at("generator").get<unsigned>()});
        cone.remainder = sos_from_json(j.at("remainder"), vars);
        return cone;
    }
    if (type == "sampled")
        return SampledProof{j.at("samples").get<unsigned>(), j.at("seed").get<uint64_t>()};
    throw std::invalid_argument("unknown proof type: " + type);
}

json factor_to_json(const TermFactor& factor, const std::vector<std::string>& vars) {
    json j;
    if (const auto* sq = std::get_if<HermitianSquareFactor>(&factor)) {
        j["type"] = "square";
        j["rows"] = matrix_to_json(sq->u, vars);
        if (sq->gram) j["gram"] = rational_matrix_to_json(*sq->gram);
    } else {
        const auto& p = std::get<UnivariatePsdFactor>(factor).p;
        j["type"] = "univariate_psd";
        j["entries"] = matrix_to_json(p, vars);
    }
    return j;
}

TermFactor factor_from_json(const json& j, const std::vector<std::string>& vars) {
    std::string type = j.at("type").get<std::string>();
    if (type == "square") {
        HermitianSquareFactor f{matrix_from_json(j.at("rows"), vars), std::nullopt};
        if (j.contains("gram")) f.gram = rational_matrix_from_json(j.at("gram"));
        return f;
    }
    if (type == "univariate_psd") return UnivariatePsdFactor{matrix_from_json(j.at("entries"), vars)};
    throw std::invalid_argument("unknown factor type: " + type);
}

json piece_to_json(const SemiAlgebraicPiece& piece, const std::vector<std::string>& vars) {
    json j;
    j["label"] = piece.label;
    json constraints = json::array();
    for (const auto& g : piece.constraints) constraints.push_back(to_string(g, vars));
    j["constraints"] = constraints;
    if (piece.sampling_box) {
        json box = json::array();
        for (const auto& [lo, hi] : *piece.sampling_box) box.push_back({to_string(lo), to_string(hi)});
        j["sampling_box"] = box;
    }
    return j;
}

SemiAlgebraicPiece piece_from_json(const json& j, const std::vector<std::string>& vars) {
    SemiAlgebraicPiece piece;
    piece.label = j.value("label", std::string{});
    for (const auto& g : j.at("constraints"))
        piece.constraints.push_back(parse_polynomial(g.get<std::string>(), vars));
    if (j.contains("sampling_box")) {
        std::vector<std::pair<Rational, Rational>> box;
        for (const auto& pair : j.at("sampling_box"))
            box.emplace_back(parse_rational(pair.at(0).get<std::string>()),
                             parse_rational(pair.at(1).get<std::string>()));
        piece.sampling_box = std::move(box);
    }
    return piece;
}

}  // namespace

std::string write_polynomial_file(const PolynomialFile& f) {
    json j;
    j["vars"] = f.vars;
    j["poly"] = to_string(f.poly, f.vars);
    return j.dump(2) + "\n";
}

PolynomialFile read_polynomial_file(const std::string& text) {
    json j = json::parse(text);
    PolynomialFile f;
    f.vars = j.at("vars").get<std::vector<std::string>>();
    f.poly = parse_polynomial(j.at("poly").get<std::string>(), f.vars);
    return f;
}

std::string write_matrix_file(const MatrixFile& f) {
    json j;
    j["vars"] = f.vars;
    j["rows"] = f.matrix.rows();
    j["cols"] = f.matrix.cols();
    j["entries"] = matrix_to_json(f.matrix, f.vars);
    return j.dump(2) + "\n";
}

MatrixFile read_matrix_file(const std::string& text) {
    json j = json::parse(text);
    MatrixFile f;
    f.vars = j.at("vars").get<std::vector<std::string>>();
    f.matrix = matrix_from_json(j.at("entries"), f.vars);
    if (j.contains("rows") && j.at("rows").get<unsigned>() != f.matrix.rows())
        throw std::invalid_argument("matrix file: declared row count mismatch");
    if (j.contains("cols") && j.at("cols").get<unsigned>() != f.matrix.cols())
        throw std::invalid_argument("matrix file: declared col count mismatch");
    return f;
}

std::string write_certificate_file(const CertificateFile& f) {
    json j;
    j["vars"] = f.vars;
    j["size"] = f.certificate.target.rows();
    j["target"] = matrix_to_json(f.certificate.target, f.vars);
    json pieces = json::array();
    for (const auto& [piece, terms] : f.certificate.pieces) {
        json jp = piece_to_json(piece, f.vars);
        json jterms = json::array();
        for (const auto& term : terms) {
            json jt;
            jt["weight"] = to_string(term.weight, f.vars);
            jt["proof"] = proof_to_json(term.proof, f.vars);
            jt["factor"] = factor_to_json(term.factor, f.vars);
            jterms.push_back(jt);
        }
        jp["terms"] = jterms;
        pieces.push_back(jp);
    }
    j["pieces"] = pieces;
    return j.dump(2) + "\n";
}

CertificateFile read_certificate_file(const std::string& text) {
    json j = json::parse(text);
    CertificateFile f;
    f.vars = j.at("vars").get<std::vector<std::string>>();
    f.certificate.target = matrix_from_json(j.at("target"), f.vars);
    for (const auto& jp : j.at("pieces")) {
        SemiAlgebraicPiece piece = piece_from_json(jp, f.vars);
        std::vector<CertificateTerm> terms;
        for (const auto& jt : jp.at("terms")) {
            CertificateTerm term{parse_polynomial(jt.at("weight").get<std::string>(), f.vars),
                                 proof_from_json(jt.at("proof"), f.vars),
                                 factor_from_json(jt.at("factor"), f.vars)};
            terms.push_back(std::move(term));
        }
        f.certificate.pieces.emplace_back(std::move(piece), std::move(terms));
    }
    return f;
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void spit_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace semicert
