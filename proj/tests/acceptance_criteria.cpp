// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exit code = number of
// failing criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "circsep/algebra.hpp"
#include "circsep/analysis.hpp"
#include "circsep/density.hpp"
#include "circsep/families.hpp"
#include "circsep/geometry.hpp"
#include "circsep/hermitian_eig.hpp"
#include "circsep/weyl.hpp"
#include "test_support.hpp"

using namespace circsep;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criterion 12 ledger: every state certified anywhere in this suite.
struct SoundnessLedger {
  long certified = 0;
  long separable = 0;
  long violations = 0;
} g_soundness;

Verdict checked_certify(const DensityMatrix& dm) {
  const Verdict v = certify(dm);
  ++g_soundness.certified;
  if (v.kind == VerdictKind::Separable) {
    ++g_soundness.separable;
    if (!v.ppt.ppt || !is_psd(partial_transpose(dm.rho, dm.d)).psd) ++g_soundness.violations;
  }
  return v;
}

// ---------------------------------------------------------------- criterion 1
Outcome criterion_weyl_algebra() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int d : {2, 3, 5, 7}) {
    const SpinAlgebraReport rep = spin_product_check(d, 1e-12);
    worst = std::max({worst, rep.worst_product, rep.worst_adjoint, rep.worst_inverse,
                      rep.worst_orthogonality});
    if (!rep.ok) out.pass = false;
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 5.0) out.pass = false;
  out.detail << "max deviation " << worst << ", " << elapsed << " s";
  return out;
}

// ---------------------------------------------------------------- criterion 2
Outcome criterion_projector_mub() {
  Outcome out;
  double worst = 0.0, worst_mub = 0.0;
  for (int d : {2, 3, 5}) {
    for (int a = 0; a < d; ++a) {
      const ProjectorFamily& fam = projector_family(d, a);
      Matrix sum = Matrix::Zero(d, d);
      for (int m = 0; m < d; ++m) {
        const Matrix& p = fam.at(m);
        worst = std::max(worst, (p - p.adjoint().eval()).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(p.trace().real() - 1.0));
        for (int mp = 0; mp < d; ++mp) {
          const Matrix expect = (m == mp) ? p : Matrix::Zero(d, d);
          worst = std::max(worst, (fam.at(m) * fam.at(mp) - expect).cwiseAbs().maxCoeff());
        }
        sum += p;
      }
      worst = std::max(worst, (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff());
      // spectral identity over the phase-normalized unitary (S_{a,1} itself
      // for odd d)
      const Matrix w = fam.base_unitary();
      for (int r = 0; r < d; ++r)
        for (int t = 0; t < d; ++t) {
          Matrix lhs = Matrix::Identity(d, d);
          for (int i = 0; i < t; ++i) lhs = (lhs * (eta_pow(d, r) * w)).eval();
          Matrix rhs = Matrix::Zero(d, d);
          for (int m = 0; m < d; ++m)
            rhs += eta_pow(d, -static_cast<long long>(m) * t) * fam.at((m + r) % d);
          worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
      // power law (S_{a,1})^k = eta^{a C(k,2)} S_{ak,k}
      Matrix power = Matrix::Identity(d, d);
      const Matrix s = spin_matrix(d, a, 1).m;
      for (int k = 0; k < 2 * d; ++k) {
        const Matrix expect = eta_pow(d, static_cast<long long>(a) * binom2(k)) *
                              spin_matrix(d, (a * k) % d, k % d).m;
        worst = std::max(worst, (power - expect).cwiseAbs().maxCoeff());
        power = (power * s).eval();
      }
    }
    worst_mub = std::max(worst_mub, mub_overlap_check(d, 1e-10).max_deviation);
  }
  if (worst >= 1e-12 || worst_mub >= 1e-10) out.pass = false;
  out.detail << "projector/spectral deviation " << worst << ", MUB deviation " << worst_mub;
  return out;
}

// ---------------------------------------------------------------- criterion 3
Outcome criterion_ppt_oracle() {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  long agreements = 0, total = 0;
  for (int d : {2, 3, 5}) {
    for (int rep = 0; rep < 200; ++rep) {
      const auto seed = static_cast<std::uint64_t>(d) * 100000 + static_cast<std::uint64_t>(rep);
      const PermutationZd p = random_permutation(d, seed);
      const DensityMatrix dm = random_circulant_density(d, p, seed + 31337);
      const bool blocks = ppt_blocks(dm, 1e-9).ppt;
      const bool full = is_psd(partial_transpose(dm.rho, d), 1e-9).psd;
      ++total;
      if (blocks == full) ++agreements;
    }
  }
  const double elapsed = seconds_since(t0);
  out.pass = agreements == total && elapsed < 60.0;
  out.detail << agreements << "/" << total << " verdicts agree, " << elapsed << " s";
  return out;
}

SweepResult sweep_family(const std::string& family, int d, double precision = 1e-6,
                         std::map<std::string, double> params = {}) {
  FamilySpec spec;
  spec.family = family;
  spec.d = d;
  spec.params = std::move(params);
  SweepFamily sf = make_sweep_family(spec);
  sf.options.precision = precision;
  const SweepResult result = sweep_threshold(sf.density, sf.options);
  // fold every scan point into the soundness ledger
  for (const auto& row : result.scan) {
    if (!row.valid) continue;
    ++g_soundness.certified;
    if (row.separable) {
      ++g_soundness.separable;
      if (!row.ppt) ++g_soundness.violations;
    }
  }
  return result;
}

// ---------------------------------------------------------------- criterion 4
Outcome criterion_isotropic_boundaries() {
  Outcome out;
  const SweepResult d3 = sweep_family("isotropic", 3);
  const SweepResult d5 = sweep_family("isotropic", 5);
  auto near = [](double value, double expect) { return std::abs(value - expect) <= 1e-6; };
  out.pass = d3.separable_interval && d3.ppt_interval && near(d3.separable_hi, 0.25) &&
             near(d3.ppt_hi, 0.25) && near(d5.separable_hi, 1.0 / 6.0) &&
             near(d5.ppt_hi, 1.0 / 6.0);
  out.detail << "d=3 cert/ppt " << d3.separable_hi << "/" << d3.ppt_hi << ", d=5 "
             << d5.separable_hi << "/" << d5.ppt_hi;
  return out;
}

// ---------------------------------------------------------------- criterion 5
Outcome criterion_werner_boundary() {
  Outcome out;
  const SweepResult result = sweep_family("werner", 3);
  out.pass = result.separable_interval && std::abs(result.separable_hi - 0.5) <= 1e-6 &&
             std::abs(result.separable_hi - result.ppt_hi) <= 2e-6;
  out.detail << "cert " << result.separable_hi << ", ppt " << result.ppt_hi;
  return out;
}

// ---------------------------------------------------------------- criterion 6
Outcome criterion_horodecki() {
  Outcome out;
  // verdict classification across the three intervals
  auto verdict_at = [&](double alpha) { return checked_certify(horodecki_alpha(alpha)).kind; };
  for (double alpha = 2.0; alpha <= 3.0 + 1e-12; alpha += 0.125)
    if (verdict_at(alpha) != VerdictKind::Separable) {
      out.pass = false;
      out.detail << "alpha=" << alpha << " not separable; ";
    }
  for (double alpha : {3.001, 3.5, 4.0})
    if (verdict_at(alpha) != VerdictKind::Inconclusive) {
      out.pass = false;
      out.detail << "alpha=" << alpha << " not inconclusive; ";
    }
  for (double alpha : {4.001, 4.5, 5.0})
    if (verdict_at(alpha) != VerdictKind::Entangled) {
      out.pass = false;
      out.detail << "alpha=" << alpha << " not entangled; ";
    }
  const SweepResult sweep = sweep_family("horodecki", 3);
  auto near = [](double value, double expect) { return std::abs(value - expect) <= 1e-6; };
  if (!(sweep.separable_interval && near(sweep.separable_lo, 2.0) &&
        near(sweep.separable_hi, 3.0) && near(sweep.ppt_hi, 4.0))) {
    out.pass = false;
  }
  out.detail << "cert [" << sweep.separable_lo << ", " << sweep.separable_hi << "], ppt upper "
             << sweep.ppt_hi;
  return out;
}

// ---------------------------------------------------------------- criterion 7
Outcome criterion_divincenzo_grid() {
  Outcome out;
  const int d = 3;
  auto in_region = [&](double b, double c) {
    return b >= 0.0 && c >= 0.0 && c * d * d + b * d * (d - 2) <= 2.0 + 1e-12 &&
           b * d * (d - 1) <= 1.0 + 1e-12;
  };
  // the two per-branch condition sets, as regions
  auto branch_region = [&](double b, double c) {
    if (b <= c) return b >= 0.0 && c * d * d + b * d * (d - 2) <= 2.0 + 1e-12;
    return c >= 0.0 && b * d * (d - 1) <= 1.0 + 1e-12;
  };
  long grid = 0, condition_set_matches = 0, cert_matches = 0, missed = 0, extra = 0;
  double first_b = -1.0, first_c = -1.0;
  for (int ib = 0; ib <= 69; ++ib) {
    for (int ic = 0; ic <= 69; ++ic) {
      const double b = ib / 200.0, c = ic / 200.0;
      ++grid;
      if (branch_region(b, c) == in_region(b, c)) ++condition_set_matches;
      bool separable = false;
      try {
        separable = checked_certify(divincenzo(d, b, c)).kind == VerdictKind::Separable;
      } catch (const validation_error&) {
        separable = false;  // parameters outside the state space
      }
      if (separable == in_region(b, c)) {
        ++cert_matches;
      } else if (separable) {
        ++extra;
      } else {
        ++missed;
        if (first_b < 0) {
          first_b = b;
          first_c = c;
        }
      }
    }
  }
  out.pass = cert_matches == grid && condition_set_matches == grid;
  out.detail << "condition-set equivalence " << condition_set_matches << "/" << grid
             << "; certificate region " << cert_matches << "/" << grid << " (missed " << missed
             << ", extra " << extra << ")";
  if (missed > 0) {
    out.detail << "; first miss b=" << first_b << " c=" << first_c
               << " -- per-slope shift needs dc >= (d-2)b in the c<b branch (Eq. Cneg1 "
                  "requires min rho_D >= |c|(d-1)), so the larger {c>=0, bd(d-1)<=1} "
                  "region is out of reach; see README, Known red";
  }
  return out;
}

// ---------------------------------------------------------------- criterion 8
Outcome criterion_bhn_line_states() {
  Outcome out;
  for (int d : {3, 5}) {
    std::vector<DensityMatrix> lines;
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) lines.push_back(bhn_line_state(d, s, t));
    for (int j0 = 0; j0 < d; ++j0) lines.push_back(bhn_vertical_line_state(d, j0));
    int idx = 0;
    for (const auto& line : lines) {
      const bool horizontal = idx < d;  // s = 0 rows come first
      ++idx;
      const auto eigs = hermitian_eigenvalues(line.rho);
      for (int i = 0; i < d * d - d; ++i)
        if (std::abs(eigs[static_cast<std::size_t>(i)]) > 1e-10) out.pass = false;
      for (int i = d * d - d; i < d * d; ++i)
        if (std::abs(eigs[static_cast<std::size_t>(i)] - 1.0 / d) > 1e-10) out.pass = false;
      const Verdict v = checked_certify(line);
      if (v.kind != VerdictKind::Separable) out.pass = false;
      // horizontal lines are diagonal (C = 0, mu-sum 0); all others carry
      // the 1/d^2 shift
      const double expected_mu = horizontal ? 0.0 : 1.0 / (d * d);
      if (std::abs(v.mu_sum - expected_mu) > 1e-12) {
        out.pass = false;
        out.detail << "mu-sum " << v.mu_sum << " != " << expected_mu << " at line " << idx
                   << " d=" << d << "; ";
      }
    }
    // mixture boundary for a representative line state
    FamilySpec spec;
    spec.family = "bhn-line";
    spec.d = d;
    spec.params = {{"s", 1.0}, {"t", 0.0}};
    SweepFamily family = make_sweep_family(spec);
    const SweepResult mix = sweep_threshold(family.density, family.options);
    if (!(mix.separable_interval && mix.separable_hi >= 1.0 / (1.0 + d) - 1e-6)) out.pass = false;
    out.detail << "d=" << d << " mixture boundary " << mix.separable_hi << "; ";
  }
  return out;
}

// ---------------------------------------------------------------- criterion 9
Outcome criterion_two_projector_rays() {
  Outcome out;
  for (double kappa : {0.0, 0.5, 1.0, 2.0}) {
    FamilySpec spec;
    spec.family = "two-projector";
    spec.d = 3;
    spec.params = {{"kappa", kappa}};
    SweepFamily family = make_sweep_family(spec);
    const SweepResult result = sweep_threshold(family.density, family.options);
    if (!(result.separable_interval && std::abs(result.separable_hi - 0.25) <= 1e-6)) {
      out.pass = false;
      out.detail << "kappa=" << kappa << " boundary " << result.separable_hi << "; ";
    }
    // certificate region contained in the PPT region
    for (const auto& row : result.scan)
      if (row.separable && !row.ppt) {
        out.pass = false;
        out.detail << "separable outside PPT at t=" << row.parameter << "; ";
      }
    if (!(result.ppt_interval && result.ppt_hi >= result.separable_hi - 1e-9)) out.pass = false;
    out.detail << "kappa=" << kappa << ": cert " << result.separable_hi << " <= ppt "
               << result.ppt_hi << "; ";
  }
  return out;
}

// --------------------------------------------------------------- criterion 10
Outcome criterion_structural_decomposition() {
  Outcome out;
  double worst_imag = 0.0, worst_recon = 0.0, worst_closed_form = 0.0;
  std::vector<DensityMatrix> states;
  for (int d : {3, 5})
    for (double lambda : {0.0, 0.1, 1.0 / (1.0 + d), 0.4, 0.75, 1.0})
      states.push_back(isotropic(d, lambda));
  for (double p : {0.0, 0.25, 0.5, 0.8}) states.push_back(werner(3, p));
  for (double alpha : {2.0, 2.5, 3.0, 3.7, 4.3, 5.0}) states.push_back(horodecki_alpha(alpha));
  for (double b : {0.0, 0.05, 0.12, 1.0 / 6.0})
    for (double c : {0.0, 0.02, 0.1, 2.0 / 9.0}) {
      try {
        states.push_back(divincenzo(3, b, c));
      } catch (const validation_error&) {
      }
    }
  for (int d : {3, 5}) {
    for (int s = 0; s < d; ++s)
      for (int t = 0; t < d; ++t) states.push_back(bhn_line_state(d, s, t));
    for (int j0 = 0; j0 < d; ++j0) states.push_back(bhn_vertical_line_state(d, j0));
  }
  for (double alpha : {0.05, 0.125, 0.2})
    for (double beta : {0.0, 0.1}) states.push_back(bhn_two_projector(alpha, beta));
  for (int d : {3, 5})
    for (int rep = 0; rep < 50; ++rep)
      states.push_back(random_circulant_density(
          d, PermutationZd::identity(d),
          static_cast<std::uint64_t>(d) * 7777 + static_cast<std::uint64_t>(rep)));

  for (const auto& dm : states) {
    const StructuralCoefficients sc = structural_coefficients(dm);
    worst_imag = std::max(worst_imag, sc.max_imag());
    worst_recon = std::max(worst_recon, structural_reconstruction_residual(dm, sc));
  }
  // isotropic inputs match the closed form entrywise
  for (int d : {3, 5}) {
    for (double lambda : {0.1, 0.25, 0.6, 1.0}) {
      const StructuralCoefficients sc = structural_coefficients(isotropic(d, lambda));
      const double c = lambda / d;
      for (int a1 = 0; a1 < d; ++a1)
        for (int a2 = 0; a2 < d; ++a2)
          for (int m1 = 0; m1 < d; ++m1)
            for (int m2 = 0; m2 < d; ++m2) {
              const double expect =
                  ((a1 + a2) % d == 0)
                      ? (c / d) * (((m1 + m2) % d == 0 ? d : 0.0) - 1.0)
                      : 0.0;
              worst_closed_form =
                  std::max(worst_closed_form, std::abs(sc.at(a1, a2, m1, m2) - expect));
            }
    }
  }
  out.pass = worst_imag < 1e-10 && worst_recon < 1e-10 && worst_closed_form < 1e-12;
  out.detail << states.size() << " states: max |Im C| " << worst_imag << ", max residual "
             << worst_recon << ", closed-form deviation " << worst_closed_form;
  return out;
}

// --------------------------------------------------------------- criterion 11
Outcome criterion_product_entry() {
  Outcome out;
  long separable = 0, dominated = 0, total = 0;
  double worst_residual = 0.0;
  for (int d : {3, 5}) {
    for (int rep = 0; rep < 50; ++rep) {
      const double spread = (rep % 2 == 0) ? 0.02 : 0.05;
      ProductEntrySpec spec = random_product_entry_spec(
          d, static_cast<std::uint64_t>(d) * 900 + static_cast<std::uint64_t>(rep), spread);
      DensityMatrix dm;
      try {
        dm = product_entry_density(spec);
      } catch (const validation_error&) {
        // diagonal failed to dominate the blocks: rescale x and retry
        for (auto& v : spec.x) v *= 0.25;
        dm = product_entry_density(spec);
      }
      const ProductEntryAnalysis analysis = certify_product_entry(spec);
      ++total;
      for (double v : analysis.a_tilde)
        if (v < 0.0) out.pass = false;
      worst_residual = std::max(worst_residual, analysis.term_reconstruction_residual);
      if (analysis.min_diagonal >= analysis.sum_x_sq) {
        ++dominated;
        if (analysis.verdict.kind != VerdictKind::Separable) {
          out.pass = false;
          out.detail << "dominated spec not separable (d=" << d << ", rep=" << rep << "); ";
        }
      }
      if (analysis.verdict.kind == VerdictKind::Separable) {
        ++separable;
        ++g_soundness.certified;
        ++g_soundness.separable;
        if (!analysis.verdict.ppt.ppt) ++g_soundness.violations;
      }
    }
  }
  if (worst_residual >= 1e-9) out.pass = false;
  out.detail << total << " specs (" << dominated << " dominated, " << separable
             << " separable), worst term-list residual " << worst_residual;
  return out;
}

// --------------------------------------------------------------- criterion 12
Outcome criterion_soundness() {
  Outcome out;
  out.pass = g_soundness.violations == 0 && g_soundness.separable > 0;
  out.detail << g_soundness.certified << " certificates issued across the suite, "
             << g_soundness.separable << " separable verdicts, " << g_soundness.violations
             << " PPT violations among them";
  return out;
}

// --------------------------------------------------------------- criterion 13
Outcome criterion_golden_and_gf() {
  Outcome out;
  const std::string golden =
      testsupport::read_file(std::string(CIRCSEP_GOLDEN_DIR) + "/pattern_d3_identity.txt");
#ifdef CIRCSEP_CLI_PATH
  // byte-for-byte through the real binary
  const std::string command = std::string(CIRCSEP_CLI_PATH) + " render --d 3";
  std::string rendered;
  if (FILE* pipe = popen(command.c_str(), "r")) {
    char buffer[512];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) rendered.append(buffer, got);
    pclose(pipe);
  }
  if (rendered != golden) {
    out.pass = false;
    out.detail << "CLI render differs from the golden file; ";
  }
#else
  if (render_pattern(support_pattern(3, PermutationZd::identity(3))) != golden) {
    out.pass = false;
    out.detail << "render differs from the golden file; ";
  }
#endif
  // GF(4): per-block class disjointness
  const SupportPattern gf4 = gf_support_pattern(GfAddTable::of(4));
  std::set<std::pair<int, int>> seen;
  for (const auto& cls : gf4.classes()) {
    if (cls.positions.size() != 16) out.pass = false;
    for (const auto& pos : cls.positions)
      if (!seen.insert(pos).second) out.pass = false;
  }
  if (seen.size() != 64) out.pass = false;
  out.detail << "golden render ok, GF(4) classes disjoint (" << seen.size() << " positions)";
  return out;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Entry> criteria = {
      {"1. Weyl algebra (product/adjoint/orthogonality, d in {2,3,5,7})", criterion_weyl_algebra},
      {"2. projector + MUB suite (d in {2,3,5})", criterion_projector_mub},
      {"3. PPT oracle equivalence (600 random circulant densities)", criterion_ppt_oracle},
      {"4. isotropic boundaries 1/(1+d) (d in {3,5})", criterion_isotropic_boundaries},
      {"5. werner boundary p = 1/2 (d = 3)", criterion_werner_boundary},
      {"6. horodecki verdict intervals and boundaries", criterion_horodecki},
      {"7. divincenzo (b,c) grid region", criterion_divincenzo_grid},
      {"8. BHN line states (d in {3,5})", criterion_bhn_line_states},
      {"9. two-projector rays: boundary 1/4 inside PPT", criterion_two_projector_rays},
      {"10. structural decomposition (reality, reconstruction, closed form)",
       criterion_structural_decomposition},
      {"11. product-entry class (50 specs each, d in {3,5})", criterion_product_entry},
      {"12. certificate soundness (no separable verdict with PPT violated)", criterion_soundness},
      {"13. golden pattern render + GF(4) class disjointness", criterion_golden_and_gf},
  };

  int failures = 0;
  for (const auto& entry : criteria) {
    Outcome outcome;
    try {
      outcome = entry.run();
    } catch (const std::exception& err) {
      outcome.pass = false;
      outcome.detail << "exception: " << err.what();
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] %s -- %s\n", outcome.pass ? "PASS" : "FAIL", entry.name,
                outcome.detail.str().c_str());
    std::fflush(stdout);
  }
  if (failures > 0)
    std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu acceptance criteria passed\n", criteria.size());
  return failures;
}
