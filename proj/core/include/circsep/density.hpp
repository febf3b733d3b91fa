#pragma once

#include <cstdint>
#include <vector>

#include "circsep/algebra.hpp"
#include "circsep/geometry.hpp"
#include "circsep/types.hpp"

namespace circsep {

/// A d^2 x d^2 Hermitian trace-one matrix together with the circulant
/// pattern M_p its support lives on. Positivity is NOT an invariant here:
/// several families deliberately build the partial-transpose form, which is
/// indefinite in part of the parameter range.
struct DensityMatrix {
  int d = 0;
  Matrix rho;
  PermutationZd pattern;

  int n() const { return d * d; }
};

/// Hermiticity, unit trace and support containment (threshold 1e-14).
/// Throws validation_error naming the first offending entry.
void validate_density(const DensityMatrix& dm, double support_tol = tol::support);

/// The d class restrictions of a circulant density: blocks[x](j,k) is the
/// entry of rho at the unique class-x position inside block (j,k). rho is
/// positive semidefinite iff every class block is.
struct ClassBlocks {
  int d = 0;
  PermutationZd p;
  std::vector<Matrix> blocks;
};

/// Assemble a density from class blocks; each block must be Hermitian and
/// PSD (tolerance 1e-9) and the traces must sum to one.
DensityMatrix from_class_blocks(const ClassBlocks& blocks);
ClassBlocks to_class_blocks(const DensityMatrix& dm);

/// Isotropic state lambda*|Phi+><Phi+| + (1-lambda)*I/d^2: class-0
/// off-diagonal entries lambda/d, diagonal lambda/d + (1-lambda)/d^2 on
/// |jj> and (1-lambda)/d^2 elsewhere.
DensityMatrix isotropic(int d, double lambda);

/// Werner family, built directly in its partial-transpose form with
/// x_pm = (1/d)[(1-p)/(d+1) +- p/(d-1)]: class-0 entries x_-, diagonal
/// x_- + x_+ on |jj> and x_+ on |jk>.
DensityMatrix werner(int d, double p);
double werner_x_minus(int d, double p);
double werner_x_plus(int d, double p);

/// DiVincenzo-et-al family, partial-transpose form: class-0 entries
/// (c-b)/2, diagonal a = 1/d - (b+c)(d-1)/2 on |jj> and (b+c)/2 on |jk>.
/// Parameters with a negative diagonal are rejected.
DensityMatrix divincenzo(int d, double b, double c);

/// The 3x3 Horodecki state: class-0 entries 2/21 (including the |jj>
/// diagonal), alpha/21 on |01>,|12>,|20> and (5-alpha)/21 on |10>,|21>,|02>.
DensityMatrix horodecki_alpha(double alpha);

/// Mixture rho = sum c_{j,k} Ptilde_{j,k} of the d^2 maximally entangled
/// projectors Ptilde_{j,k} = |Omega_{j,k}><Omega_{j,k}|/d,
/// |Omega_{j,k}> = (S_{j,k} (x) I) sum_u |uu>. Weights c (row-major d x d)
/// must be nonnegative and sum to one. Built both from the projectors and
/// from the closed-form entries; the two must agree to 1e-12.
DensityMatrix bhn_density(int d, const std::vector<double>& c);

/// Weights supported on the phase-space line r = s*j + t (all of weight
/// 1/d); these are rank-d projectors divided by d.
DensityMatrix bhn_line_state(int d, int s, int t);
/// Vertical-line variant: weights on the column j = j0.
DensityMatrix bhn_vertical_line_state(int d, int j0);

/// rho(t) = (1-t)/d^2 * I + t * rho; the circulant pattern is preserved.
DensityMatrix mix_with_identity(const DensityMatrix& dm, double t);

/// d=3 two-projector example (1-a-b)/9 * I + a*Ptilde_{1,0} + b*Ptilde_{2,0}.
DensityMatrix bhn_two_projector(double alpha, double beta);

/// Circulant density with product off-diagonal entries
/// rho_{n(n+r),(n+k)(n+r+k)} = x(n,r) * conj(x(n+k,r)) and a free diagonal.
struct ProductEntrySpec {
  int d = 0;
  std::vector<cxd> x;            // row-major (n, r), d*d values
  std::vector<double> diagonal;  // d^2 values, indexed by flat (n1,n2)

  cxd at(int n, int r) const { return x[static_cast<std::size_t>(n * d + r)]; }
};

/// Validates trace one and per-class-block positivity before returning.
DensityMatrix product_entry_density(const ProductEntrySpec& spec);

/// Random permutation of Z_d with p(0) = 0.
PermutationZd random_permutation(int d, std::uint64_t seed);
/// Random PSD circulant density: Gram-matrix class blocks, trace-normalized.
DensityMatrix random_circulant_density(int d, const PermutationZd& p, std::uint64_t seed);
/// Random product-entry spec with uniform diagonal and x scaled by `spread`.
ProductEntrySpec random_product_entry_spec(int d, std::uint64_t seed, double spread);

}  // namespace circsep
