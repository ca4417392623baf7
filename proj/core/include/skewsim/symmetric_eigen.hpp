#pragma once

#include <vector>

namespace skewsim {

/// Eigenvalues (ascending) of a dense real symmetric n x n matrix given in
/// row-major order. Householder reduction to tridiagonal form followed by
/// implicit-shift QL iteration, eigenvalues only; the input is consumed as
/// scratch. `iteration_budget` caps QL sweeps per eigenvalue; exceeding it
/// throws NumericError.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n,
                                          int iteration_budget = 50);

}  // namespace skewsim
