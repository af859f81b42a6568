#pragma once

#include <cstdint>
#include <string>

#include "rbfc/truth_table.hpp"

namespace rbfc {

// Algebraic normal form: coefficient bit at index u is the coefficient of
// the monomial prod x_i^{u_i}.
struct AnfForm {
    int n = 0;
    TruthTable coefficients;

    // Max Hamming weight of a set coefficient index; -1 for the zero function.
    int degree() const;

    // "x1*x2 + x3" style, monomials sorted by coefficient index; "0"/"1" for
    // the constants.
    std::string to_string() const;
};

// Binary Moebius transform; self-inverse.
AnfForm anf(const TruthTable& f);
TruthTable anf_to_table(const AnfForm& a);

} // namespace rbfc
