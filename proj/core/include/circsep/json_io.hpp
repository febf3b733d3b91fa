#pragma once

#include <optional>
#include <string>

#include "circsep/analysis.hpp"
#include "circsep/density.hpp"
#include "circsep/families.hpp"
#include "circsep/geometry.hpp"

namespace circsep {

/// Density JSON: {"d": ..., "permutation": [...], "entries": [[re, im], ...]}
/// (row-major d^2 x d^2). The loader also accepts the family shorthand
/// {"family": "isotropic", "d": 3, "lambda": 0.25}, a class-block form
/// {"d", "permutation", "blocks": [...]}, and a product-entry form
/// {"d", "x": [[re,im],...], "diagonal": [...]}. Invariants are validated.
std::string density_to_json(const DensityMatrix& dm, int indent = 2);
DensityMatrix density_from_json(const std::string& text);

/// Pattern JSON: {"d", "permutation" | "gf", "classes": [[[r,s],...],...]}.
std::string pattern_to_json(const SupportPattern& pattern, int indent = 2);

std::string product_spec_to_json(const ProductEntrySpec& spec, int indent = 2);
ProductEntrySpec product_spec_from_json(const std::string& text);

/// Everything cmd_analyze reports: both PPT routes, the l1 test, and the
/// certificate machinery (when d is prime).
struct FullAnalysis {
  bool certify_supported = false;  // prime d only
  std::optional<Verdict> verdict;
  PptReport ppt;
  PsdResult state_psd;
  PsdResult full_partial_transpose;
  SpinL1Result l1;
};

FullAnalysis run_full_analysis(const DensityMatrix& dm, const CertifyOptions& opts = {});

/// Machine-readable report. Timing is the caller's business (deterministic
/// output modulo an optional "timing_ms" field the CLI appends).
std::string analysis_report_json(const DensityMatrix& dm, const FullAnalysis& analysis,
                                 const std::string& input_echo, int indent = 2);

std::string sweep_report_json(const SweepResult& result, const SweepFamily& family,
                              const std::string& input_echo, int indent = 2);

std::string verdict_to_json(const Verdict& verdict, int indent = 2);

}  // namespace circsep
