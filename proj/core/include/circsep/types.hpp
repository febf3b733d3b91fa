#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace circsep {

using cxd = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Input failed a precondition or structural check (CLI exit code 2).
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// An internal numerical routine failed to converge or verify (CLI exit code 3).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

namespace tol {
// Default absolute tolerances. Condition numbers are benign at these
// dimensions (matrices are at most 121x121), so absolute cutoffs suffice.
inline constexpr double eigenvalue = 1e-9;       // PSD verdicts
inline constexpr double reconstruction = 1e-10;  // structural decompositions
inline constexpr double weight = 1e-12;          // certificate weight clamping
inline constexpr double support = 1e-14;         // pattern membership threshold
inline constexpr double hermiticity = 1e-12;
}  // namespace tol

}  // namespace circsep
