#include "circsep/density.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "circsep/hermitian_eig.hpp"
#include "circsep/weyl.hpp"

namespace circsep {

void validate_density(const DensityMatrix& dm, double support_tol) {
  const int n = dm.n();
  if (dm.rho.rows() != n || dm.rho.cols() != n)
    throw validation_error("density: matrix is not d^2 x d^2");
  if (dm.pattern.d() != dm.d) throw validation_error("density: pattern dimension mismatch");
  const double herm = (dm.rho - dm.rho.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > tol::hermiticity)
    throw validation_error("density: not Hermitian (max deviation " + std::to_string(herm) + ")");
  const double trace_dev = std::abs(dm.rho.trace() - cxd(1.0, 0.0));
  if (trace_dev > tol::hermiticity)
    throw validation_error("density: trace differs from one by " + std::to_string(trace_dev));
  const SupportPattern pat = support_pattern(dm.d, dm.pattern);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (!pat.contains(r, c) && std::abs(dm.rho(r, c)) > support_tol) {
        std::ostringstream os;
        os << "density: entry (" << r << "," << c << ") with magnitude " << std::abs(dm.rho(r, c))
           << " lies outside support(M_p)";
        throw validation_error(os.str());
      }
}

DensityMatrix from_class_blocks(const ClassBlocks& blocks) {
  const int d = blocks.d;
  if (d < 2 || blocks.p.d() != d || static_cast<int>(blocks.blocks.size()) != d)
    throw validation_error("from_class_blocks: need d blocks and a matching permutation");
  double total_trace = 0.0;
  for (int x = 0; x < d; ++x) {
    const Matrix& a = blocks.blocks[static_cast<std::size_t>(x)];
    if (a.rows() != d || a.cols() != d)
      throw validation_error("from_class_blocks: block " + std::to_string(x) + " is not d x d");
    if ((a - a.adjoint().eval()).cwiseAbs().maxCoeff() > tol::hermiticity)
      throw validation_error("from_class_blocks: block " + std::to_string(x) + " is not Hermitian");
    const double min_eig = min_hermitian_eigenvalue(a);
    if (min_eig < -tol::eigenvalue) {
      std::ostringstream os;
      os << "from_class_blocks: class " << x << " is not PSD (min eigenvalue " << min_eig << ")";
      throw validation_error(os.str());
    }
    total_trace += a.trace().real();
  }
  if (std::abs(total_trace - 1.0) > 1e-9)
    throw validation_error("from_class_blocks: block traces sum to " + std::to_string(total_trace));

  DensityMatrix dm{d, Matrix::Zero(d * d, d * d), blocks.p};
  const SupportPattern pat = support_pattern(d, blocks.p);
  for (int x = 0; x < d; ++x)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        const auto [row, col] = pat.class_position(x, j, k);
        dm.rho(row, col) = blocks.blocks[static_cast<std::size_t>(x)](j, k);
      }
  return dm;
}

ClassBlocks to_class_blocks(const DensityMatrix& dm) {
  ClassBlocks out{dm.d, dm.pattern, {}};
  out.blocks.assign(static_cast<std::size_t>(dm.d), Matrix::Zero(dm.d, dm.d));
  const SupportPattern pat = support_pattern(dm.d, dm.pattern);
  for (int x = 0; x < dm.d; ++x)
    for (int j = 0; j < dm.d; ++j)
      for (int k = 0; k < dm.d; ++k) {
        const auto [row, col] = pat.class_position(x, j, k);
        out.blocks[static_cast<std::size_t>(x)](j, k) = dm.rho(row, col);
      }
  return out;
}

namespace {

DensityMatrix identity_pattern_density(int d, Matrix rho) {
  DensityMatrix dm{d, std::move(rho), PermutationZd::identity(d)};
  validate_density(dm);
  return dm;
}

}  // namespace

DensityMatrix isotropic(int d, double lambda) {
  if (d < 2) throw validation_error("isotropic: dimension must be >= 2");
  if (lambda < 0.0 || lambda > 1.0)
    throw validation_error("isotropic: lambda must lie in [0,1], got " + std::to_string(lambda));
  const int n = d * d;
  Matrix rho = Matrix::Zero(n, n);
  const double off = lambda / d;
  const double background = (1.0 - lambda) / (n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      rho(tensor_to_flat(d, j, k), tensor_to_flat(d, j, k)) = background;
      if (j != k) rho(tensor_to_flat(d, j, j), tensor_to_flat(d, k, k)) = off;
    }
  for (int j = 0; j < d; ++j) rho(tensor_to_flat(d, j, j), tensor_to_flat(d, j, j)) += off;
  return identity_pattern_density(d, std::move(rho));
}

double werner_x_minus(int d, double p) {
  return ((1.0 - p) / (d + 1.0) - p / (d - 1.0)) / d;
}

double werner_x_plus(int d, double p) {
  return ((1.0 - p) / (d + 1.0) + p / (d - 1.0)) / d;
}

DensityMatrix werner(int d, double p) {
  if (d < 2) throw validation_error("werner: dimension must be >= 2");
  if (p < 0.0 || p > 1.0)
    throw validation_error("werner: p must lie in [0,1], got " + std::to_string(p));
  const double xm = werner_x_minus(d, p);
  const double xp = werner_x_plus(d, p);
  const int n = d * d;
  Matrix rho = Matrix::Zero(n, n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      if (j == k) {
        rho(tensor_to_flat(d, j, j), tensor_to_flat(d, j, j)) = xm + xp;
      } else {
        rho(tensor_to_flat(d, j, j), tensor_to_flat(d, k, k)) = xm;
        rho(tensor_to_flat(d, j, k), tensor_to_flat(d, j, k)) = xp;
      }
    }
  return identity_pattern_density(d, std::move(rho));
}

DensityMatrix divincenzo(int d, double b, double c) {
  if (d < 2) throw validation_error("divincenzo: dimension must be >= 2");
  const double a = 1.0 / d - (b + c) * (d - 1.0) / 2.0;
  const double off_diag_value = (b + c) / 2.0;
  if (a < -tol::weight || off_diag_value < -tol::weight) {
    std::ostringstream os;
    os << "divincenzo: diagonal would be negative (a = " << a << ", (b+c)/2 = " << off_diag_value
       << ")";
    throw validation_error(os.str());
  }
  const double coupling = (c - b) / 2.0;
  const int n = d * d;
  Matrix rho = Matrix::Zero(n, n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      if (j == k) {
        rho(tensor_to_flat(d, j, j), tensor_to_flat(d, j, j)) = a;
      } else {
        rho(tensor_to_flat(d, j, j), tensor_to_flat(d, k, k)) = coupling;
        rho(tensor_to_flat(d, j, k), tensor_to_flat(d, j, k)) = off_diag_value;
      }
    }
  const double trace = rho.trace().real();
  if (std::abs(trace - 1.0) > 1e-9)
    throw validation_error("divincenzo: trace is " + std::to_string(trace) + ", not one");
  return identity_pattern_density(d, std::move(rho));
}

DensityMatrix horodecki_alpha(double alpha) {
  if (alpha < 0.0 || alpha > 5.0)
    throw validation_error("horodecki_alpha: alpha must lie in [0,5], got " +
                           std::to_string(alpha));
  const int d = 3;
  Matrix rho = Matrix::Zero(9, 9);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k)
      rho(tensor_to_flat(d, j, j), tensor_to_flat(d, k, k)) = 2.0 / 21.0;
  // sigma_+ cycle |01>,|12>,|20> and sigma_- cycle |10>,|21>,|02|
  for (int j = 0; j < d; ++j) {
    rho(tensor_to_flat(d, j, (j + 1) % d), tensor_to_flat(d, j, (j + 1) % d)) = alpha / 21.0;
    rho(tensor_to_flat(d, (j + 1) % d, j), tensor_to_flat(d, (j + 1) % d, j)) =
        (5.0 - alpha) / 21.0;
  }
  return identity_pattern_density(d, std::move(rho));
}

namespace {

Matrix bhn_from_projectors(int d, const std::vector<double>& c) {
  const int n = d * d;
  Matrix rho = Matrix::Zero(n, n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) {
      const double w = c[static_cast<std::size_t>(j * d + k)];
      if (w == 0.0) continue;
      // |Omega_{j,k}> = sum_m eta^{jm} |m, m+k>, squared norm d
      Eigen::VectorXcd omega = Eigen::VectorXcd::Zero(n);
      for (int m = 0; m < d; ++m)
        omega(tensor_to_flat(d, m, (m + k) % d)) = eta_pow(d, static_cast<long long>(j) * m);
      rho += (w / d) * (omega * omega.adjoint());
    }
  return rho;
}

Matrix bhn_from_entries(int d, const std::vector<double>& c) {
  const int n = d * d;
  Matrix rho = Matrix::Zero(n, n);
  for (int nn = 0; nn < d; ++nn)
    for (int r = 0; r < d; ++r)
      for (int k = 0; k < d; ++k) {
        cxd acc = 0.0;
        for (int j = 0; j < d; ++j)
          acc += c[static_cast<std::size_t>(j * d + r)] *
                 eta_pow(d, -static_cast<long long>(j) * k);
        rho(tensor_to_flat(d, nn, (nn + r) % d),
            tensor_to_flat(d, (nn + k) % d, (nn + r + k) % d)) = acc / static_cast<double>(d);
      }
  return rho;
}

}  // namespace

DensityMatrix bhn_density(int d, const std::vector<double>& c) {
  if (!is_prime(d)) throw validation_error("bhn_density: dimension must be prime");
  if (static_cast<int>(c.size()) != d * d)
    throw validation_error("bhn_density: need d*d weights");
  double total = 0.0;
  for (double w : c) {
    if (w < 0.0) throw validation_error("bhn_density: weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw validation_error("bhn_density: weights sum to " + std::to_string(total) + ", not one");

  Matrix from_entries = bhn_from_entries(d, c);
  const Matrix from_projectors = bhn_from_projectors(d, c);
  const double dev = (from_entries - from_projectors).cwiseAbs().maxCoeff();
  if (dev > 1e-12)
    throw numeric_error("bhn_density: projector and entry constructions disagree by " +
                        std::to_string(dev));
  return identity_pattern_density(d, std::move(from_entries));
}

DensityMatrix bhn_line_state(int d, int s, int t) {
  if (!is_prime(d)) throw validation_error("bhn_line_state: dimension must be prime");
  if (s < 0 || s >= d || t < 0 || t >= d)
    throw validation_error("bhn_line_state: line parameters out of range");
  std::vector<double> c(static_cast<std::size_t>(d * d), 0.0);
  for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(j * d + (s * j + t) % d)] = 1.0 / d;
  return bhn_density(d, c);
}

DensityMatrix bhn_vertical_line_state(int d, int j0) {
  if (!is_prime(d)) throw validation_error("bhn_vertical_line_state: dimension must be prime");
  if (j0 < 0 || j0 >= d) throw validation_error("bhn_vertical_line_state: column out of range");
  std::vector<double> c(static_cast<std::size_t>(d * d), 0.0);
  for (int r = 0; r < d; ++r) c[static_cast<std::size_t>(j0 * d + r)] = 1.0 / d;
  return bhn_density(d, c);
}

DensityMatrix mix_with_identity(const DensityMatrix& dm, double t) {
  if (t < 0.0 || t > 1.0)
    throw validation_error("mix_with_identity: t must lie in [0,1], got " + std::to_string(t));
  DensityMatrix out{dm.d, ((1.0 - t) / dm.n()) * Matrix::Identity(dm.n(), dm.n()) + t * dm.rho,
                    dm.pattern};
  return out;
}

DensityMatrix bhn_two_projector(double alpha, double beta) {
  if (alpha < 0.0 || beta < 0.0 || alpha + beta > 1.0)
    throw validation_error("bhn_two_projector: need alpha, beta >= 0 with alpha + beta <= 1");
  const int d = 3;
  std::vector<double> c(9, 0.0);
  const double t = alpha + beta;
  if (t == 0.0) return mix_with_identity(bhn_line_state(d, 0, 0), 0.0);
  c[1 * 3 + 0] = alpha / t;
  c[2 * 3 + 0] = beta / t;
  // (1-t)/9 I + alpha Ptilde_{1,0} + beta Ptilde_{2,0}
  return mix_with_identity(bhn_density(d, c), t);
}

DensityMatrix product_entry_density(const ProductEntrySpec& spec) {
  const int d = spec.d;
  if (d < 2) throw validation_error("product_entry_density: dimension must be >= 2");
  const int n = d * d;
  if (static_cast<int>(spec.x.size()) != n || static_cast<int>(spec.diagonal.size()) != n)
    throw validation_error("product_entry_density: x must be d*d and diagonal d^2 values");
  double trace = 0.0;
  for (double v : spec.diagonal) {
    if (v < 0.0) throw validation_error("product_entry_density: diagonal must be nonnegative");
    trace += v;
  }
  if (std::abs(trace - 1.0) > 1e-9)
    throw validation_error("product_entry_density: diagonal sums to " + std::to_string(trace));

  Matrix rho = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) rho(i, i) = spec.diagonal[static_cast<std::size_t>(i)];
  for (int m = 0; m < d; ++m)
    for (int r = 0; r < d; ++r)
      for (int k = 1; k < d; ++k) {
        rho(tensor_to_flat(d, m, (m + r) % d), tensor_to_flat(d, (m + k) % d, (m + r + k) % d)) =
            spec.at(m, r) * std::conj(spec.at((m + k) % d, r));
      }
  DensityMatrix dm{d, std::move(rho), PermutationZd::identity(d)};
  validate_density(dm);
  const ClassBlocks blocks = to_class_blocks(dm);
  for (int x = 0; x < d; ++x) {
    const double min_eig = min_hermitian_eigenvalue(blocks.blocks[static_cast<std::size_t>(x)]);
    if (min_eig < -tol::eigenvalue) {
      std::ostringstream os;
      os << "product_entry_density: class " << x << " block is not PSD (min eigenvalue "
         << min_eig << "); diagonal does not dominate";
      throw validation_error(os.str());
    }
  }
  return dm;
}

PermutationZd random_permutation(int d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> v(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = i;
  for (int i = d - 1; i >= 2; --i) {
    std::uniform_int_distribution<int> pick(1, i);
    std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(pick(rng))]);
  }
  return PermutationZd(std::move(v));
}

DensityMatrix random_circulant_density(int d, const PermutationZd& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ClassBlocks blocks{d, p, {}};
  double total = 0.0;
  for (int x = 0; x < d; ++x) {
    Matrix g(d, d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) g(r, c) = cxd(gauss(rng), gauss(rng));
    Matrix a = g * g.adjoint();
    total += a.trace().real();
    blocks.blocks.push_back(std::move(a));
  }
  for (auto& a : blocks.blocks) a /= total;
  return from_class_blocks(blocks);
}

ProductEntrySpec random_product_entry_spec(int d, std::uint64_t seed, double spread) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ProductEntrySpec spec;
  spec.d = d;
  const int n = d * d;
  spec.x.resize(static_cast<std::size_t>(n));
  for (auto& v : spec.x) v = spread * cxd(gauss(rng), gauss(rng));
  spec.diagonal.assign(static_cast<std::size_t>(n), 1.0 / n);
  return spec;
}

}  // namespace circsep
