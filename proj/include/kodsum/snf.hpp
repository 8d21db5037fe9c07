#pragma once

#include <vector>

#include "kodsum/integer.hpp"
#include "kodsum/matrix.hpp"

namespace kodsum {

/// U * M * V = D with U, V unimodular and D diagonal, d1 | d2 | ..., di >= 0.
struct SmithForm {
    Matrix<BigInt> D;
    Matrix<BigInt> U;
    Matrix<BigInt> V;

    /// Nonzero diagonal entries of D in order.
    std::vector<BigInt> invariant_factors() const;
    std::size_t rank() const;
};

SmithForm snf(const Matrix<BigInt>& M);
SmithForm snf(const Matrix<Int>& M);

Matrix<BigInt> to_big(const Matrix<Int>& M);

/// Determinant by fraction-free elimination (Bareiss). Square input only.
BigInt determinant(const Matrix<BigInt>& M);

} // namespace kodsum
