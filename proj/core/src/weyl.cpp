#include "circsep/weyl.hpp"

#include <array>
#include <atomic>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <utility>

namespace circsep {

long long binom2(long long k) { return k * (k - 1) / 2; }

namespace {

void check_spin_indices(int d, int j, int k) {
  if (d < 2) throw validation_error("spin_matrix: dimension must be >= 2");
  if (j < 0 || j >= d || k < 0 || k >= d)
    throw validation_error("spin_matrix: index (j,k) out of range");
}

}  // namespace

SpinMatrix spin_matrix(int d, int j, int k) {
  return relabeled_spin_matrix(d, j, k, PermutationZd::identity(d));
}

SpinMatrix relabeled_spin_matrix(int d, int j, int k, const PermutationZd& sigma) {
  check_spin_indices(d, j, k);
  if (sigma.d() != d) throw validation_error("relabeled_spin_matrix: permutation size mismatch");
  Matrix m = Matrix::Zero(d, d);
  for (int row = 0; row < d; ++row)
    m(sigma(row), sigma((row + k) % d)) = eta_pow(d, static_cast<long long>(j) * row);
  return SpinMatrix{d, j, k, sigma, std::move(m)};
}

SpinAlgebraReport spin_product_check(int d, double tolerance) {
  if (d < 2) throw validation_error("spin_product_check: dimension must be >= 2");
  std::vector<Matrix> s(static_cast<std::size_t>(d * d));
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) s[static_cast<std::size_t>(j * d + k)] = spin_matrix(d, j, k).m;
  auto at = [&](int j, int k) -> const Matrix& {
    return s[static_cast<std::size_t>(((j % d + d) % d) * d + ((k % d + d) % d))];
  };

  SpinAlgebraReport rep;
  const Matrix eye = Matrix::Identity(d, d);
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      const Matrix adj = at(j, k).adjoint();
      rep.worst_adjoint = std::max(
          rep.worst_adjoint,
          (adj - eta_pow(d, static_cast<long long>(j) * k) * at(-j, -k)).cwiseAbs().maxCoeff());
      rep.worst_inverse =
          std::max(rep.worst_inverse, (at(j, k) * adj - eye).cwiseAbs().maxCoeff());
      for (int u = 0; u < d; ++u) {
        for (int v = 0; v < d; ++v) {
          rep.worst_product = std::max(
              rep.worst_product,
              (at(j, k) * at(u, v) - eta_pow(d, static_cast<long long>(k) * u) * at(j + u, k + v))
                  .cwiseAbs()
                  .maxCoeff());
          const cxd inner = (adj * at(u, v)).trace();
          const double expect = (j == u && k == v) ? static_cast<double>(d) : 0.0;
          rep.worst_orthogonality = std::max(rep.worst_orthogonality, std::abs(inner - expect));
        }
      }
    }
  }
  rep.ok = rep.worst_product <= tolerance && rep.worst_adjoint <= tolerance &&
           rep.worst_inverse <= tolerance && rep.worst_orthogonality <= tolerance;
  return rep;
}

Matrix ProjectorFamily::base_unitary() const {
  return spin_matrix(d, a, 1).m / phase;
}

namespace {

// phi_a: the principal d-th root of eta^{a*C(d,2) mod d}. Equals 1 for odd d
// (d divides C(d,2)); equals i^a for d = 2, where S_{1,1} = i*sigma_y has
// order four rather than two.
cxd slope_phase(int d, int a) {
  const long long c2 = binom2(d) % d;
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(a * c2) /
                       (static_cast<double>(d) * static_cast<double>(d));
  return {std::cos(angle), std::sin(angle)};
}

ProjectorFamily build_family(int d, int a) {
  ProjectorFamily fam;
  fam.d = d;
  fam.a = a;
  fam.phase = slope_phase(d, a);
  const Matrix w = spin_matrix(d, a, 1).m / fam.phase;
  fam.p.assign(static_cast<std::size_t>(d), Matrix::Zero(d, d));
  Matrix wt = Matrix::Identity(d, d);  // W^t
  for (int t = 0; t < d; ++t) {
    for (int m = 0; m < d; ++m)
      fam.p[static_cast<std::size_t>(m)] += eta_pow(d, static_cast<long long>(m) * t) * wt;
    wt = (wt * w).eval();
  }
  for (auto& proj : fam.p) proj /= static_cast<double>(d);
  return fam;
}

}  // namespace

const ProjectorFamily& projector_family(int d, int a) {
  if (!is_prime(d))
    throw validation_error("projector_family: dimension " + std::to_string(d) +
                           " is not prime; the spectral machinery requires prime d");
  if (a < 0 || a >= d) throw validation_error("projector_family: slope out of range");
  // Families are built once per (d, a); reads are lock-free after that. The
  // fixed-size slot table covers every dimension this library targets, with
  // a mutex-guarded map as the overflow path. Cached families live for the
  // process lifetime.
  constexpr int kMaxCachedD = 64;
  if (d < kMaxCachedD) {
    static std::array<std::atomic<const ProjectorFamily*>, kMaxCachedD * kMaxCachedD> slots{};
    auto& slot = slots[static_cast<std::size_t>(d * kMaxCachedD + a)];
    if (const ProjectorFamily* hit = slot.load(std::memory_order_acquire)) return *hit;
    const auto* built = new ProjectorFamily(build_family(d, a));
    const ProjectorFamily* expected = nullptr;
    if (!slot.compare_exchange_strong(expected, built, std::memory_order_acq_rel)) {
      delete built;  // another thread won the race
      return *expected;
    }
    return *built;
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<ProjectorFamily>> overflow;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = overflow[{d, a}];
  if (!slot) slot = std::make_unique<ProjectorFamily>(build_family(d, a));
  return *slot;
}

Matrix general_projector(int d, int j, int k, int r) {
  check_spin_indices(d, j, k);
  if (r < 0 || r >= d) throw validation_error("general_projector: index out of range");
  const Matrix s = spin_matrix(d, j, k).m;
  Matrix acc = Matrix::Zero(d, d);
  Matrix sm = Matrix::Identity(d, d);
  for (int m = 0; m < d; ++m) {
    acc += eta_pow(d, static_cast<long long>(m) * r) * sm;
    sm = (sm * s).eval();
  }
  return acc / static_cast<double>(d);
}

SpinMatrix spin_from_projectors(int d, int j, int k) {
  check_spin_indices(d, j, k);
  if (k == 0) throw validation_error("spin_from_projectors: k = 0 has no slope a = j*k^{-1}");
  ModRing ring(d);
  if (!ring.is_prime()) throw validation_error("spin_from_projectors: dimension must be prime");
  const int a = ring.mul(j, ring.inverse(k));
  const auto& fam = projector_family(d, a);
  Matrix acc = Matrix::Zero(d, d);
  for (int m = 0; m < d; ++m)
    acc += eta_pow(d, -static_cast<long long>(m) * k) * fam.at(m);
  // S_{ak,k} = eta^{-a C(k,2)} phi_a^k W^k with W^k = sum_m eta^{-mk} P(m)
  const cxd front = eta_pow(d, -static_cast<long long>(a) * binom2(k)) * std::pow(fam.phase, k);
  SpinMatrix out{d, j, k, PermutationZd::identity(d), front * acc};
  return out;
}

MubReport mub_overlap_check(int d, double tolerance) {
  MubReport rep;
  const double expect = 1.0 / d;
  for (int a = 0; a < d; ++a) {
    for (int b = a + 1; b < d; ++b) {
      const auto& fa = projector_family(d, a);
      const auto& fb = projector_family(d, b);
      for (int m = 0; m < d; ++m)
        for (int mp = 0; mp < d; ++mp) {
          const double overlap = (fa.at(m) * fb.at(mp)).trace().real();
          rep.max_deviation = std::max(rep.max_deviation, std::abs(overlap - expect));
        }
    }
  }
  rep.ok = rep.max_deviation <= tolerance;
  return rep;
}

double SpinCoefficients::l1_sum() const {
  double acc = 0.0;
  for (const cxd& v : s_) acc += std::abs(v);
  return acc;
}

SpinCoefficients spin_coefficients(const Matrix& rho, int d) {
  const int n = d * d;
  if (rho.rows() != n || rho.cols() != n)
    throw validation_error("spin_coefficients: matrix is not d^2 x d^2");
  std::vector<cxd> s(static_cast<std::size_t>(n) * n);
  // Tr[(S_{u1,v1} (x) S_{u2,v2})^dagger rho]: the Weyl support picks out the
  // entries rho_{(m1,m2),(m1+v1,m2+v2)}.
  for (int u1 = 0; u1 < d; ++u1)
    for (int v1 = 0; v1 < d; ++v1)
      for (int u2 = 0; u2 < d; ++u2)
        for (int v2 = 0; v2 < d; ++v2) {
          cxd acc = 0.0;
          for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
              const cxd w = std::conj(eta_pow(d, static_cast<long long>(u1) * m1) *
                                      eta_pow(d, static_cast<long long>(u2) * m2));
              acc += w * rho(m1 * d + m2, ((m1 + v1) % d) * d + (m2 + v2) % d);
            }
          s[static_cast<std::size_t>(((u1 * d + v1) * d + u2) * d + v2)] = acc;
        }
  return SpinCoefficients(d, std::move(s));
}

Matrix reconstruct_from_spin(const SpinCoefficients& s) {
  const int d = s.d();
  const int n = d * d;
  Matrix rho = Matrix::Zero(n, n);
  for (int u1 = 0; u1 < d; ++u1)
    for (int v1 = 0; v1 < d; ++v1)
      for (int u2 = 0; u2 < d; ++u2)
        for (int v2 = 0; v2 < d; ++v2) {
          const cxd coeff = s.at(u1, v1, u2, v2);
          if (std::abs(coeff) == 0.0) continue;
          for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
              rho(m1 * d + m2, ((m1 + v1) % d) * d + (m2 + v2) % d) +=
                  coeff * eta_pow(d, static_cast<long long>(u1) * m1) *
                  eta_pow(d, static_cast<long long>(u2) * m2);
            }
        }
  return rho / static_cast<double>(n);
}

}  // namespace circsep
