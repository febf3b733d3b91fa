#pragma once

#include <vector>

#include "circsep/algebra.hpp"
#include "circsep/types.hpp"

namespace circsep {

/// Discrete Weyl matrix S_{j,k} = sum_m eta^{jm} |m><m+k| (generalized
/// Pauli); for d=2: S_{1,0} = sigma_z, S_{0,1} = sigma_x, S_{1,1} = i*sigma_y.
/// An optional relabeling sigma of the computational basis gives
/// S_{j,k}(sigma) = sum_m eta^{jm} |sigma(m)><sigma(m+k)|.
struct SpinMatrix {
  int d = 0;
  int j = 0;
  int k = 0;
  PermutationZd sigma;
  Matrix m;
};

SpinMatrix spin_matrix(int d, int j, int k);
SpinMatrix relabeled_spin_matrix(int d, int j, int k, const PermutationZd& sigma);

/// Exhaustive check of the Weyl algebra over all index pairs:
///   S_{j,k} S_{u,v} = eta^{ku} S_{j+u,k+v}
///   (S_{j,k})^dagger = eta^{jk} S_{-j,-k} = (S_{j,k})^{-1}
///   <S_{j,k}|S_{u,v}> = d * delta
struct SpinAlgebraReport {
  bool ok = false;
  double worst_product = 0.0;
  double worst_adjoint = 0.0;
  double worst_inverse = 0.0;
  double worst_orthogonality = 0.0;
};
SpinAlgebraReport spin_product_check(int d, double tolerance = 1e-12);

/// The rank-one projector family attached to slope a (prime d only):
/// P_{a,1}(m) = (1/d) sum_t eta^{mt} W_a^t, where W_a is S_{a,1} with its
/// global phase normalized so W_a^d = I exactly. For odd primes the phase is
/// 1 and W_a = S_{a,1}; for d = 2 the slope-1 operator S_{1,1} = i*sigma_y
/// has order four, and the normalization (W_1 = sigma_y) is what makes the
/// family a genuine orthogonal resolution of the identity.
struct ProjectorFamily {
  int d = 0;
  int a = 0;
  cxd phase;                // phi_a with S_{a,1} = phi_a * W_a
  std::vector<Matrix> p;    // p[m], m = 0..d-1
  const Matrix& at(int m) const { return p[static_cast<std::size_t>(m)]; }
  /// W_a = phase^{-1} * S_{a,1}; its spectral projectors are exactly p[m]
  /// with eigenvalue eta^{-m}.
  Matrix base_unitary() const;
};

/// Cached per (d, a); throws for composite d.
const ProjectorFamily& projector_family(int d, int a);

/// Literal P_{j,k}(r) = (1/d) sum_m eta^{mr} (S_{j,k})^m. A genuine
/// projector family for odd prime d; kept as a helper for tests.
Matrix general_projector(int d, int j, int k, int r);

/// Rebuild S_{j,k} (k != 0, d prime) from the slope a = j*k^{-1} family via
/// the spectral formula; must agree with spin_matrix to machine precision.
SpinMatrix spin_from_projectors(int d, int j, int k);

/// Cross-slope trace overlaps Tr[P_{a,1}(m) P_{b,1}(m')] = 1/d: the slope
/// eigenbases are mutually unbiased.
struct MubReport {
  bool ok = false;
  double max_deviation = 0.0;
};
MubReport mub_overlap_check(int d, double tolerance = 1e-10);

/// Coefficients s_{u,v} = Tr[(S_{u1,v1} (x) S_{u2,v2})^dagger rho] of a
/// bipartite density in the tensor-Weyl basis,
/// rho = (1/d^2) sum s_{u,v} S_{u1,v1} (x) S_{u2,v2}.
class SpinCoefficients {
 public:
  SpinCoefficients(int d, std::vector<cxd> s) : d_(d), s_(std::move(s)) {}
  int d() const { return d_; }
  cxd at(int j1, int k1, int j2, int k2) const {
    return s_[static_cast<std::size_t>(((j1 * d_ + k1) * d_ + j2) * d_ + k2)];
  }
  const std::vector<cxd>& raw() const { return s_; }
  double l1_sum() const;

 private:
  int d_;
  std::vector<cxd> s_;
};

SpinCoefficients spin_coefficients(const Matrix& rho, int d);
Matrix reconstruct_from_spin(const SpinCoefficients& s);

/// Integer binomial C(k,2) = k(k-1)/2 (zero for k in {0,1}).
long long binom2(long long k);

}  // namespace circsep
