#include "circsep/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>

namespace circsep {

namespace {

double offdiag_norm_sq(const Matrix& a) {
  const Eigen::Index n = a.rows();
  double acc = 0.0;
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q) acc += std::norm(a(p, q));
  return acc;
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& input) {
  if (input.rows() != input.cols())
    throw validation_error("hermitian_eigenvalues: matrix is not square");
  const Eigen::Index n = input.rows();
  if (n == 0) return {};

  Matrix a = 0.5 * (input + input.adjoint().eval());
  if (n == 1) return {a(0, 0).real()};

  const double scale = std::max(1.0, a.norm());
  const double stop = 1e-30 * scale * scale;  // squared off-diagonal target
  constexpr int kMaxSweeps = 64;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (offdiag_norm_sq(a) <= stop) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g <= 1e-300) continue;
        // Factor out the phase so the (p,q) plane reduces to a real
        // symmetric 2x2, then apply the classic Jacobi rotation.
        const cxd phase = a(p, q) / g;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = tau >= 0.0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cxd phc = std::conj(phase);
        // columns: A <- A*G with G(p,p)=c, G(p,q)=s, G(q,p)=-s*phc, G(q,q)=c*phc
        for (Eigen::Index i = 0; i < n; ++i) {
          const cxd tp = a(i, p), tq = a(i, q);
          a(i, p) = c * tp - s * phc * tq;
          a(i, q) = s * tp + c * phc * tq;
        }
        // rows: A <- G^dagger * A
        for (Eigen::Index i = 0; i < n; ++i) {
          const cxd tp = a(p, i), tq = a(q, i);
          a(p, i) = c * tp - s * phase * tq;
          a(q, i) = s * tp + c * phase * tq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  if (!converged && offdiag_norm_sq(a) > stop * 1e6)
    throw numeric_error("hermitian_eigenvalues: Jacobi sweep limit reached without convergence");

  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

double min_hermitian_eigenvalue(const Matrix& a) {
  return hermitian_eigenvalues(a).front();
}

}  // namespace circsep
