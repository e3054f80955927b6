#ifndef REEBCERT_SMITH_HPP
#define REEBCERT_SMITH_HPP

#include "reebcert/matrix.hpp"

namespace reebcert {

// U * A * V = D with U (rows x rows) and V (cols x cols) unimodular and D
// diagonal with d1 | d2 | ... | dr >= 0.
struct SmithDecomposition {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;

    Int diagonal(std::size_t i) const { return i < std::min(d.rows(), d.cols()) ? d.at(i, i) : Int(0); }
};

// Fraction-free row/column reduction pivoting on the entry of least nonzero
// absolute value. Total: works for any shape including empty and zero
// matrices. Sign fixes are applied on the row side, so V is the identity for
// every already-diagonal input.
SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace reebcert

#endif
