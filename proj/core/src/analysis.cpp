#include "circsep/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "circsep/hermitian_eig.hpp"
#include "circsep/weyl.hpp"

namespace circsep {

PsdResult is_psd(const Matrix& h, double tolerance) {
  if (h.rows() != h.cols()) throw validation_error("is_psd: matrix is not square");
  const double herm = (h - h.adjoint().eval()).cwiseAbs().maxCoeff();
  if (herm > 1e-10)
    throw validation_error("is_psd: matrix is not Hermitian (max deviation " +
                           std::to_string(herm) + ")");
  const double min_eig = min_hermitian_eigenvalue(h);
  return {min_eig >= -tolerance, min_eig};
}

Matrix partial_transpose(const Matrix& rho, int d) {
  const int n = d * d;
  if (rho.rows() != n || rho.cols() != n)
    throw validation_error("partial_transpose: matrix is not d^2 x d^2");
  Matrix out(n, n);
  for (int j1 = 0; j1 < d; ++j1)
    for (int j2 = 0; j2 < d; ++j2)
      for (int k1 = 0; k1 < d; ++k1)
        for (int k2 = 0; k2 < d; ++k2)
          out(j1 * d + k2, k1 * d + j2) = rho(j1 * d + j2, k1 * d + k2);
  return out;
}

PptReport ppt_blocks(const DensityMatrix& dm, double tolerance) {
  validate_density(dm);
  const int d = dm.d;
  const auto& p = dm.pattern;
  PptReport rep;
  rep.tolerance = tolerance;
  rep.ppt = true;
  auto md = [d](int x) { return ((x % d) + d) % d; };
  for (int y = 0; y < d; ++y) {
    Matrix t(d, d);
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        t(j, k) = dm.rho(j * d + md(y - p(k)), k * d + md(y - p(j)));
    const double min_eig = min_hermitian_eigenvalue(t);
    rep.class_min_eigenvalues.push_back(min_eig);
    if (min_eig < -tolerance && rep.witness_class < 0) {
      rep.ppt = false;
      rep.witness_class = y;
    }
  }
  return rep;
}

PositivityReport positivity_blocks(const DensityMatrix& dm, double tolerance) {
  validate_density(dm);
  const ClassBlocks blocks = to_class_blocks(dm);
  PositivityReport rep;
  rep.psd = true;
  for (int x = 0; x < dm.d; ++x) {
    const double min_eig =
        min_hermitian_eigenvalue(blocks.blocks[static_cast<std::size_t>(x)]);
    rep.class_min_eigenvalues.push_back(min_eig);
    if (min_eig < -tolerance && rep.witness_class < 0) {
      rep.psd = false;
      rep.witness_class = x;
    }
  }
  return rep;
}

SpinL1Result spin_l1_condition(const DensityMatrix& dm) {
  const double trace_dev = std::abs(dm.rho.trace() - cxd(1.0, 0.0));
  if (trace_dev > 1e-10)
    throw validation_error("spin_l1_condition: trace differs from one");
  const double sum = spin_coefficients(dm.rho, dm.d).l1_sum();
  return {sum <= 2.0 + 1e-12, sum};
}

StructuralCoefficients::StructuralCoefficients(int d, std::vector<double> c, double max_imag)
    : d_(d), c_(std::move(c)), max_imag_(max_imag) {
  mu_.assign(static_cast<std::size_t>(d * d), 0.0);
  mu_sum_ = 0.0;
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2) {
      double min_c = 0.0;
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) min_c = std::min(min_c, at(a1, a2, m1, m2));
      const double mu = std::max(0.0, -min_c);
      mu_[static_cast<std::size_t>(a1 * d + a2)] = mu;
      mu_sum_ += mu;
    }
}

namespace {

// phi_a^k correction factors (identically one for odd d; powers of i for
// d = 2, where the slope-1 Weyl operator has order four).
std::vector<cxd> slope_phase_powers(int d, int a) {
  const long long c2 = binom2(d) % d;
  std::vector<cxd> powers(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(a * c2 * k) /
                         (static_cast<double>(d) * static_cast<double>(d));
    powers[static_cast<std::size_t>(k)] = {std::cos(angle), std::sin(angle)};
  }
  return powers;
}

void require_identity_pattern(const DensityMatrix& dm, const char* who) {
  if (!dm.pattern.is_identity())
    throw validation_error(std::string(who) +
                           ": requires the identity circulant pattern "
                           "(relabel first, as certify does)");
}

// Conjugate by Pi_sigma (x) I with sigma = p^{-1}: moves support(M_p) onto
// support(M). Pure index remapping, no arithmetic.
DensityMatrix relabel_to_identity(const DensityMatrix& dm) {
  const int d = dm.d;
  const PermutationZd sigma = dm.pattern.inverse();
  Matrix out(dm.n(), dm.n());
  for (int u1 = 0; u1 < d; ++u1)
    for (int u2 = 0; u2 < d; ++u2)
      for (int v1 = 0; v1 < d; ++v1)
        for (int v2 = 0; v2 < d; ++v2)
          out(u1 * d + u2, v1 * d + v2) = dm.rho(sigma(u1) * d + u2, sigma(v1) * d + v2);
  return DensityMatrix{d, std::move(out), PermutationZd::identity(d)};
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const int ra = static_cast<int>(a.rows()), ca = static_cast<int>(a.cols());
  const int rb = static_cast<int>(b.rows()), cb = static_cast<int>(b.cols());
  Matrix out(ra * rb, ca * cb);
  for (int i = 0; i < ra; ++i)
    for (int j = 0; j < ca; ++j) out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
  return out;
}

}  // namespace

StructuralCoefficients structural_coefficients(const DensityMatrix& dm) {
  const int d = dm.d;
  if (!is_prime(d))
    throw validation_error("structural_coefficients: dimension must be prime");
  require_identity_pattern(dm, "structural_coefficients");
  validate_density(dm);

  // Stage one: F_k(a1,a2) = sum_{n1,n2} eta^{-k(a1 n1 + a2 n2)} rho_{n1n2,(n1+k)(n2+k)}
  std::vector<cxd> f(static_cast<std::size_t>(d * d * d));
  for (int k = 1; k < d; ++k)
    for (int a1 = 0; a1 < d; ++a1)
      for (int a2 = 0; a2 < d; ++a2) {
        cxd acc = 0.0;
        for (int n1 = 0; n1 < d; ++n1)
          for (int n2 = 0; n2 < d; ++n2)
            acc += eta_pow(d, -static_cast<long long>(k) * (a1 * n1 + a2 * n2)) *
                   dm.rho(n1 * d + n2, ((n1 + k) % d) * d + (n2 + k) % d);
        f[static_cast<std::size_t>((k * d + a1) * d + a2)] = acc;
      }

  // Stage two: fold in the k-dependent phases.
  std::vector<double> c(static_cast<std::size_t>(d * d * d * d));
  double max_imag = 0.0;
  for (int a1 = 0; a1 < d; ++a1) {
    const auto phi1 = slope_phase_powers(d, a1);
    for (int a2 = 0; a2 < d; ++a2) {
      const auto phi2 = slope_phase_powers(d, a2);
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) {
          cxd acc = 0.0;
          for (int k = 1; k < d; ++k) {
            const long long exponent =
                -binom2(k) * (a1 + a2) - static_cast<long long>(k) * (m1 + m2);
            acc += phi1[static_cast<std::size_t>(k)] * phi2[static_cast<std::size_t>(k)] *
                   eta_pow(d, exponent) * f[static_cast<std::size_t>((k * d + a1) * d + a2)];
          }
          acc /= static_cast<double>(d * d);
          max_imag = std::max(max_imag, std::abs(acc.imag()));
          c[static_cast<std::size_t>(((a1 * d + a2) * d + m1) * d + m2)] = acc.real();
        }
    }
  }
  return StructuralCoefficients(d, std::move(c), max_imag);
}

double structural_reconstruction_residual(const DensityMatrix& dm,
                                          const StructuralCoefficients& sc) {
  const int d = dm.d;
  Matrix rebuilt = Matrix::Zero(dm.n(), dm.n());
  rebuilt.diagonal() = dm.rho.diagonal();
  for (int a1 = 0; a1 < d; ++a1) {
    const auto& fam1 = projector_family(d, a1);
    for (int a2 = 0; a2 < d; ++a2) {
      const auto& fam2 = projector_family(d, a2);
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) {
          const double w = sc.at(a1, a2, m1, m2);
          if (w == 0.0) continue;
          rebuilt += w * kron(fam1.at(m1), fam2.at(m2));
        }
    }
  }
  return (rebuilt - dm.rho).cwiseAbs().maxCoeff();
}

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::Separable:
      return "separable";
    case VerdictKind::Entangled:
      return "entangled";
    default:
      return "inconclusive";
  }
}

namespace {

// Assemble verdict + certificate once per-term weights are known. The term
// list lives in the identity-pattern basis of `ident`; `relabel` carries it
// back to the original density's basis for the residual check. The full
// decomposition reads rho = diag(remainder) + sum_terms w * P (x) P, with
// remainder = rho_D - identity_weight (the identity mass is already inside
// the shifted term weights).
Verdict finish_certificate(const DensityMatrix& original, const DensityMatrix& ident,
                           const PermutationZd& relabel, std::vector<CertTerm> terms,
                           double identity_weight, const CertifyOptions& opts) {
  const int d = original.d;
  Verdict verdict;
  verdict.mu_sum = identity_weight;
  verdict.min_diagonal = ident.rho.diagonal().real().minCoeff();
  verdict.ppt = ppt_blocks(original, opts.eig_tolerance);

  if (verdict.min_diagonal - identity_weight >= -opts.weight_tolerance) {
    SeparabilityCertificate cert;
    cert.relabel = relabel;
    cert.identity_weight = identity_weight;
    for (auto& term : terms) {
      if (term.weight < -opts.weight_tolerance)
        throw numeric_error("certify: negative product weight after shift");
      // clamp tiny negatives and drop rounding-noise terms; the residual
      // check below still guards the 1e-9 budget
      if (term.weight <= 1e-14) continue;
      cert.terms.push_back(term);
    }
    cert.remainder.resize(static_cast<std::size_t>(ident.n()));
    for (int i = 0; i < ident.n(); ++i)
      cert.remainder[static_cast<std::size_t>(i)] = ident.rho(i, i).real() - identity_weight;

    Matrix rebuilt = Matrix::Zero(ident.n(), ident.n());
    for (int i = 0; i < ident.n(); ++i)
      rebuilt(i, i) = cert.remainder[static_cast<std::size_t>(i)];
    for (const auto& term : cert.terms) {
      rebuilt += term.weight * kron(projector_family(d, term.a1).at(term.m1),
                                    projector_family(d, term.a2).at(term.m2));
    }
    // undo the relabeling: rho = (Pi_sigma (x) I) rho_ident (Pi_sigma (x) I)^dagger
    Matrix back(ident.n(), ident.n());
    const PermutationZd& sigma = relabel;
    for (int u1 = 0; u1 < d; ++u1)
      for (int u2 = 0; u2 < d; ++u2)
        for (int v1 = 0; v1 < d; ++v1)
          for (int v2 = 0; v2 < d; ++v2)
            back(sigma(u1) * d + u2, sigma(v1) * d + v2) = rebuilt(u1 * d + u2, v1 * d + v2);
    cert.residual = (back - original.rho).cwiseAbs().maxCoeff();
    if (cert.residual > 1e-9)
      throw numeric_error("certify: certificate reconstruction residual " +
                          std::to_string(cert.residual));
    verdict.kind = VerdictKind::Separable;
    verdict.certificate = std::move(cert);
    if (!verdict.ppt.ppt)
      throw numeric_error("certify: issued a certificate for a PPT-violating state");
    return verdict;
  }

  verdict.shortfall = identity_weight - verdict.min_diagonal;
  verdict.kind = verdict.ppt.ppt ? VerdictKind::Inconclusive : VerdictKind::Entangled;
  return verdict;
}

}  // namespace

Verdict certify(const DensityMatrix& dm, const CertifyOptions& opts) {
  const int d = dm.d;
  if (!is_prime(d))
    throw validation_error("certify: dimension must be prime (composite d gets PPT analysis only)");
  validate_density(dm);

  const bool relabeled = !dm.pattern.is_identity();
  const DensityMatrix ident = relabeled ? relabel_to_identity(dm) : dm;
  const PermutationZd sigma = dm.pattern.inverse();

  const StructuralCoefficients sc = structural_coefficients(ident);
  if (sc.max_imag() > 1e-10)
    throw numeric_error("certify: structural coefficients have imaginary residue " +
                        std::to_string(sc.max_imag()));
  const double residual = structural_reconstruction_residual(ident, sc);
  if (residual > opts.recon_tolerance)
    throw numeric_error("certify: structural reconstruction residual " + std::to_string(residual));

  std::vector<CertTerm> terms;
  terms.reserve(static_cast<std::size_t>(d * d * d * d));
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2) {
      const double mu = sc.mu(a1, a2);
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2)
          terms.push_back(CertTerm{sc.at(a1, a2, m1, m2) + mu, a1, m1, a2, m2});
    }
  return finish_certificate(dm, ident, sigma, std::move(terms), sc.mu_sum(), opts);
}

Verdict certify_mixture(const DensityMatrix& dm, double t, const CertifyOptions& opts) {
  return certify(mix_with_identity(dm, t), opts);
}

std::optional<std::vector<double>> extract_cr(const DensityMatrix& dm, double tolerance) {
  const int d = dm.d;
  if (!dm.pattern.is_identity()) return std::nullopt;
  std::vector<double> cr(static_cast<std::size_t>(d), 0.0);
  for (int r = 0; r < d; ++r) {
    const cxd probe = dm.rho(0 * d + r, (1 % d) * d + (r + 1) % d);
    if (std::abs(probe.imag()) > tolerance) return std::nullopt;
    cr[static_cast<std::size_t>(r)] = probe.real();
  }
  for (int n1 = 0; n1 < d; ++n1)
    for (int r = 0; r < d; ++r)
      for (int k = 1; k < d; ++k) {
        const cxd v = dm.rho(n1 * d + (n1 + r) % d, ((n1 + k) % d) * d + (n1 + r + k) % d);
        if (std::abs(v - cxd(cr[static_cast<std::size_t>(r)], 0.0)) > tolerance)
          return std::nullopt;
      }
  return cr;
}

Verdict certify_general_cr(const DensityMatrix& dm, const std::vector<double>& cr,
                           const CertifyOptions& opts) {
  const int d = dm.d;
  if (!is_prime(d)) throw validation_error("certify_general_cr: dimension must be prime");
  require_identity_pattern(dm, "certify_general_cr");
  validate_density(dm);
  if (static_cast<int>(cr.size()) != d)
    throw validation_error("certify_general_cr: need d values c_r");
  // Validate rhocond1 against the supplied constants.
  for (int n1 = 0; n1 < d; ++n1)
    for (int r = 0; r < d; ++r)
      for (int k = 1; k < d; ++k) {
        const cxd v = dm.rho(n1 * d + (n1 + r) % d, ((n1 + k) % d) * d + (n1 + r + k) % d);
        if (std::abs(v - cxd(cr[static_cast<std::size_t>(r)], 0.0)) > 1e-10) {
          std::ostringstream os;
          os << "certify_general_cr: entry at n1=" << n1 << " r=" << r << " k=" << k
             << " is " << v << ", inconsistent with c_r=" << cr[static_cast<std::size_t>(r)];
          throw validation_error(os.str());
        }
      }

  const ModRing ring(d);
  double s = 0.0;
  bool all_nonneg = true;
  bool tail_nonneg = true;  // c_r >= 0 for r != 0
  for (int r = 0; r < d; ++r) {
    s += cr[static_cast<std::size_t>(r)];
    if (cr[static_cast<std::size_t>(r)] < -1e-15) {
      all_nonneg = false;
      if (r != 0) tail_nonneg = false;
    }
  }

  std::vector<CertTerm> terms;
  double identity_weight = 0.0;
  if (all_nonneg) {
    // rho = rho_D - s I(x)I + sum_r c_r sum_{a,m} P_{a,1}(m) (x) P_{-a,1}(ar - m)
    identity_weight = s;
    for (int r = 0; r < d; ++r) {
      const double w = cr[static_cast<std::size_t>(r)];
      if (w <= 0.0) continue;
      for (int a = 0; a < d; ++a)
        for (int m = 0; m < d; ++m)
          terms.push_back(CertTerm{w, a, m, ring.neg(a), ring.reduce(a * r - m)});
    }
  } else if (cr[0] < 0.0 && tail_nonneg && std::abs(s) <= 1e-12) {
    // c_0 < 0 <= c_r, s = 0: remainder rho_D - d|c_0| I(x)I
    const double c0 = -cr[0];
    identity_weight = d * c0;
    for (int r = 1; r < d; ++r) {
      const double w = cr[static_cast<std::size_t>(r)];
      if (w <= 0.0) continue;
      for (int a = 0; a < d; ++a)
        for (int m = 0; m < d; ++m)
          terms.push_back(CertTerm{w, a, m, ring.neg(a), ring.reduce(a * r - m)});
    }
    for (int a = 0; a < d; ++a)
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) {
          if ((m1 + m2) % d == 0) continue;
          terms.push_back(CertTerm{c0, a, m1, ring.neg(a), m2});
        }
  } else {
    // Sign pattern outside the two special-case groupings: generic shift.
    return certify(dm, opts);
  }

  return finish_certificate(dm, dm, PermutationZd::identity(d), std::move(terms),
                            identity_weight, opts);
}

ProductEntryAnalysis certify_product_entry(const ProductEntrySpec& spec,
                                           const CertifyOptions& opts) {
  const int d = spec.d;
  if (!is_prime(d) || d == 2)
    throw validation_error(
        "certify_product_entry: requires an odd prime dimension (the Atilde weights "
        "presume the odd-prime projector normalization)");
  const DensityMatrix dm = product_entry_density(spec);

  ProductEntryAnalysis out;
  out.min_diagonal = dm.rho.diagonal().real().minCoeff();
  for (const cxd& v : spec.x) out.sum_x_sq += std::norm(v);

  // Atilde(r,b,t) = |(1/d) sum_n x(n,r) eta^{C(n,2) b + n t}|^2
  out.a_tilde.assign(static_cast<std::size_t>(d * d * d), 0.0);
  for (int r = 0; r < d; ++r)
    for (int b = 0; b < d; ++b)
      for (int t = 0; t < d; ++t) {
        cxd acc = 0.0;
        for (int n = 0; n < d; ++n)
          acc += spec.at(n, r) * eta_pow(d, binom2(n) * b + static_cast<long long>(n) * t);
        acc /= static_cast<double>(d);
        out.a_tilde[static_cast<std::size_t>((r * d + b) * d + t)] = std::norm(acc);
      }

  // Group the Q(r,b,t) structure onto the (a,m) grid:
  // weight(a1,m1,a2,m2) = sum_r Atilde(r, a1+a2, m1+m2+r*a2).
  std::vector<CertTerm> terms;
  for (int a1 = 0; a1 < d; ++a1)
    for (int a2 = 0; a2 < d; ++a2)
      for (int m1 = 0; m1 < d; ++m1)
        for (int m2 = 0; m2 < d; ++m2) {
          double w = 0.0;
          for (int r = 0; r < d; ++r)
            w += out.a_tilde[static_cast<std::size_t>(
                (r * d + (a1 + a2) % d) * d + (m1 + m2 + r * a2) % d)];
          terms.push_back(CertTerm{w, a1, m1, a2, m2});
        }

  // Term-list reconstruction, checked whether or not the diagonal dominates.
  Matrix rebuilt = Matrix::Zero(dm.n(), dm.n());
  rebuilt.diagonal() = dm.rho.diagonal();
  rebuilt.diagonal().array() -= out.sum_x_sq;
  for (const auto& term : terms) {
    if (term.weight == 0.0) continue;
    rebuilt += term.weight * kron(projector_family(d, term.a1).at(term.m1),
                                  projector_family(d, term.a2).at(term.m2));
  }
  out.term_reconstruction_residual = (rebuilt - dm.rho).cwiseAbs().maxCoeff();

  out.verdict = finish_certificate(dm, dm, PermutationZd::identity(d), std::move(terms),
                                   out.sum_x_sq, opts);
  const double excess = out.sum_x_sq - out.min_diagonal;
  out.mixing_t_bound = excess > 0.0 ? 1.0 / (1.0 + d * d * excess) : 1.0;
  return out;
}

namespace {

struct ScanPredicate {
  bool valid = false;
  bool separable = false;
  bool ppt = false;
};

ScanPredicate evaluate_family(const DensityFamily& family, double parameter,
                              const CertifyOptions& opts) {
  ScanPredicate out;
  DensityMatrix dm;
  try {
    dm = family(parameter);
    validate_density(dm);
  } catch (const validation_error&) {
    return out;
  }
  out.valid = true;
  const PsdResult state_psd = is_psd(dm.rho, opts.eig_tolerance);
  out.ppt = state_psd.psd && ppt_blocks(dm, opts.eig_tolerance).ppt;
  try {
    out.separable = certify(dm, opts).kind == VerdictKind::Separable;
  } catch (const validation_error&) {
    out.separable = false;
  }
  return out;
}

// Locate the single contiguous run of `true` in flags; returns false if the
// set is empty or split.
bool find_interval(const std::vector<bool>& flags, int& first, int& last) {
  first = -1;
  last = -1;
  int runs = 0;
  for (int i = 0; i < static_cast<int>(flags.size()); ++i) {
    if (flags[static_cast<std::size_t>(i)]) {
      if (i == 0 || !flags[static_cast<std::size_t>(i - 1)]) {
        ++runs;
        if (runs == 1) first = i;
      }
      if (runs == 1) last = i;
    }
  }
  return runs == 1;
}

double bisect_edge(const std::function<bool(double)>& inside, double good, double bad,
                   double precision) {
  while (std::abs(bad - good) > precision) {
    const double mid = 0.5 * (good + bad);
    if (inside(mid))
      good = mid;
    else
      bad = mid;
  }
  return good;
}

}  // namespace

SweepResult sweep_threshold(const DensityFamily& family, const SweepOptions& opts) {
  if (opts.scan_points < 3) throw validation_error("sweep_threshold: need at least 3 scan points");
  if (!(opts.hi > opts.lo)) throw validation_error("sweep_threshold: empty parameter range");
  if (opts.precision < 1e-10)
    throw validation_error("sweep_threshold: bisection precision must be >= 1e-10");

  SweepResult result;
  const double step = (opts.hi - opts.lo) / (opts.scan_points - 1);
  std::vector<bool> sep_flags, ppt_flags;
  for (int i = 0; i < opts.scan_points; ++i) {
    const double param = opts.lo + step * i;
    const ScanPredicate pred = evaluate_family(family, param, opts.certify);
    result.scan.push_back({param, pred.valid, pred.separable, pred.ppt});
    sep_flags.push_back(pred.separable);
    ppt_flags.push_back(pred.ppt);
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  auto locate = [&](const std::vector<bool>& flags, bool want_sep, bool& is_interval,
                    double& lo_edge, double& hi_edge) {
    int first = -1, last = -1;
    is_interval = find_interval(flags, first, last);
    if (first < 0) {
      lo_edge = nan;
      hi_edge = nan;
      is_interval = false;
      return;
    }
    if (!is_interval) return;  // split success set: report scan only
    auto inside = [&](double param) {
      const ScanPredicate pred = evaluate_family(family, param, opts.certify);
      return want_sep ? pred.separable : pred.ppt;
    };
    lo_edge = first == 0
                  ? opts.lo
                  : bisect_edge(inside, opts.lo + step * first, opts.lo + step * (first - 1),
                                opts.precision);
    hi_edge = last == opts.scan_points - 1
                  ? opts.hi
                  : bisect_edge(inside, opts.lo + step * last, opts.lo + step * (last + 1),
                                opts.precision);
  };

  locate(sep_flags, true, result.separable_interval, result.separable_lo, result.separable_hi);
  locate(ppt_flags, false, result.ppt_interval, result.ppt_lo, result.ppt_hi);
  return result;
}

}  // namespace circsep
