#pragma once

#include <string>
#include <vector>

#include "semicert/certificate.hpp"

namespace semicert {

// Structured text formats. Polynomials travel as canonical strings of the
// polycore grammar, so parse(print(x)) == x holds for every payload.

struct PolynomialFile {
    std::vector<std::string> vars;
    Polynomial poly;
};

struct MatrixFile {
    std::vector<std::string> vars;
    MatrixPolynomial matrix;
};

struct CertificateFile {
    std::vector<std::string> vars;
    PiecewiseCertificate certificate;
};

std::string write_polynomial_file(const PolynomialFile& f);
PolynomialFile read_polynomial_file(const std::string& text);

std::string write_matrix_file(const MatrixFile& f);
MatrixFile read_matrix_file(const std::string& text);

std::string write_certificate_file(const CertificateFile& f);
CertificateFile read_certificate_file(const std::string& text);

std::string slurp_file(const std::string& path);
void spit_file(const std::string& path, const std::string& content);

}  // namespace semicert
