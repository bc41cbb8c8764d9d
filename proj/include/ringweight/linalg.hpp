#pragma once

#include <optional>
#include <vector>

#include "ringweight/scalar.hpp"

namespace ringweight {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Rank over the exact Gaussian rationals (fraction-preserving elimination).
size_t matrix_rank(ScalarMatrix m);

/// True iff the matrix is square with full rank.
bool invertible(const ScalarMatrix& m);

/// Solves a x = b exactly. Returns std::nullopt when the system is
/// inconsistent; free variables are set to zero.
std::optional<std::vector<Scalar>> solve_linear(ScalarMatrix a, std::vector<Scalar> b);

}  // namespace ringweight
