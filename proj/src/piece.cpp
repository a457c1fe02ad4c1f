#include "semicert/piece.hpp"

#include <stdexcept>

namespace semicert {

unsigned SemiAlgebraicPiece::nvars() const {
    if (constraints.empty()) throw std::logic_error("piece with no constraints has unknown arity");
    return constraints.front().nvars();
}

bool SemiAlgebraicPiece::contains(const std::vector<Rational>& point) const {
    for (const auto& g : constraints)
        if (g.evaluate(point) < 0) return false;
    return true;
}

SemiAlgebraicPiece whole_space_piece(unsigned nvars, std::string label) {
    SemiAlgebraicPiece p;
    p.constraints.push_back(Polynomial(nvars));  // 0 >= 0
    p.label = std::move(label);
    return p;
}

}  // namespace semicert
