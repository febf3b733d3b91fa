#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "circsep/analysis.hpp"
#include "circsep/density.hpp"

namespace circsep {

/// A named density family plus its scalar parameters; the shorthand the CLI
/// flags and the JSON loader both map onto.
struct FamilySpec {
  std::string family;
  int d = 3;
  std::map<std::string, double> params;
  std::uint64_t seed = 20240831;
  std::vector<int> permutation;  // used by "random"; empty = identity
};

/// Known families: isotropic (lambda), werner (p), divincenzo (b, c),
/// horodecki (alpha), bhn-line (s, t, vertical), two-projector (alpha,
/// beta), random (seed, permutation). An optional "mix" parameter applies
/// mix_with_identity afterwards.
DensityMatrix make_family(const FamilySpec& spec);

std::vector<std::string> family_names();

/// One-parameter sweep configuration for a family: the density map, the
/// scan range, and the boundary values reported in the literature (used for
/// regression comparison in sweep reports; NaN when unknown).
struct SweepFamily {
  DensityFamily density;
  SweepOptions options;
  std::string parameter;
  double expected_separable_hi;
  double expected_ppt_hi;
};

SweepFamily make_sweep_family(const FamilySpec& spec);

}  // namespace circsep
