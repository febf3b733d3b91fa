#pragma once

#include <vector>

#include "circsep/types.hpp"

namespace circsep {

/// Eigenvalues of a complex Hermitian matrix, ascending, via cyclic Jacobi
/// with two-sided unitary rotations. Diagonalization is done on a working
/// copy; the input is symmetrized to (A + A^dagger)/2 first.
///
/// Aimed at the small dense matrices of this library (n <= ~130), where
/// Jacobi's accuracy is excellent and the O(n^3)-per-sweep cost irrelevant.
std::vector<double> hermitian_eigenvalues(const Matrix& a);

/// Smallest eigenvalue only (same solver).
double min_hermitian_eigenvalue(const Matrix& a);

}  // namespace circsep
