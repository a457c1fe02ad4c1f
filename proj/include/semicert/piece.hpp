#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicert/polynomial.hpp"

namespace semicert {

// Solution set of finitely many inequalities g_k(x) >= 0. Absolute-value
// descriptions like |x| >= |z| are stored in polynomial form x^2 - z^2 >= 0.
struct SemiAlgebraicPiece {
    std::vector<Polynomial> constraints;
    std::string label;
    // Box the samplers draw from; defaults to the unit box. Pieces that live
    // in a small corner (orthants at 0+) set this so rejection sampling can
    // actually hit them.
    std::optional<std::vector<std::pair<Rational, Rational>>> sampling_box;

    unsigned nvars() const;
    bool contains(const std::vector<Rational>& point) const;  // exact
    bool operator==(const SemiAlgebraicPiece& other) const {
        return constraints == other.constraints && label == other.label &&
               sampling_box == other.sampling_box;
    }
};

SemiAlgebraicPiece whole_space_piece(unsigned nvars, std::string label = "R^n");

}  // namespace semicert
