#include "circsep/families.hpp"

#include <cmath>
#include <limits>

namespace circsep {

namespace {

double get_param(const FamilySpec& spec, const std::string& key, double fallback,
                 bool required = false) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    if (required)
      throw validation_error("family '" + spec.family + "': missing parameter --" + key);
    return fallback;
  }
  return it->second;
}

DensityMatrix make_base(const FamilySpec& spec) {
  const std::string& name = spec.family;
  if (name == "isotropic") return isotropic(spec.d, get_param(spec, "lambda", 0.0, true));
  if (name == "werner") return werner(spec.d, get_param(spec, "p", 0.0, true));
  if (name == "divincenzo")
    return divincenzo(spec.d, get_param(spec, "b", 0.0, true), get_param(spec, "c", 0.0, true));
  if (name == "horodecki") return horodecki_alpha(get_param(spec, "alpha", 0.0, true));
  if (name == "bhn-line") {
    if (get_param(spec, "vertical", 0.0) != 0.0)
      return bhn_vertical_line_state(spec.d, static_cast<int>(get_param(spec, "t", 0.0, true)));
    return bhn_line_state(spec.d, static_cast<int>(get_param(spec, "s", 0.0, true)),
                          static_cast<int>(get_param(spec, "t", 0.0, true)));
  }
  if (name == "two-projector")
    return bhn_two_projector(get_param(spec, "alpha", 0.0, true),
                             get_param(spec, "beta", 0.0, true));
  if (name == "random") {
    const PermutationZd p = spec.permutation.empty() ? PermutationZd::identity(spec.d)
                                                     : PermutationZd(spec.permutation);
    return random_circulant_density(spec.d, p, spec.seed);
  }
  throw validation_error("unknown family '" + name + "'");
}

}  // namespace

DensityMatrix make_family(const FamilySpec& spec) {
  DensityMatrix dm = make_base(spec);
  auto mix = spec.params.find("mix");
  if (mix != spec.params.end()) dm = mix_with_identity(dm, mix->second);
  return dm;
}

std::vector<std::string> family_names() {
  return {"isotropic", "werner", "divincenzo", "horodecki", "bhn-line", "two-projector", "random"};
}

SweepFamily make_sweep_family(const FamilySpec& spec) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  SweepFamily out;
  out.expected_separable_hi = nan;
  out.expected_ppt_hi = nan;
  const std::string& name = spec.family;
  FamilySpec base = spec;

  if (name == "isotropic") {
    out.parameter = "lambda";
    out.options.lo = 0.0;
    out.options.hi = 1.0;
    out.expected_separable_hi = 1.0 / (1.0 + spec.d);
    out.expected_ppt_hi = 1.0 / (1.0 + spec.d);
    out.density = [base](double v) mutable {
      base.params["lambda"] = v;
      return make_family(base);
    };
    return out;
  }
  if (name == "werner") {
    out.parameter = "p";
    out.options.lo = 0.0;
    out.options.hi = 1.0;
    out.expected_separable_hi = 0.5;
    out.expected_ppt_hi = 0.5;
    out.density = [base](double v) mutable {
      base.params["p"] = v;
      return make_family(base);
    };
    return out;
  }
  if (name == "horodecki") {
    out.parameter = "alpha";
    out.options.lo = 0.0;
    out.options.hi = 5.0;
    out.options.scan_points = 251;
    out.expected_separable_hi = 3.0;
    out.expected_ppt_hi = 4.0;
    out.density = [base](double v) mutable {
      base.params["alpha"] = v;
      return make_family(base);
    };
    return out;
  }
  if (name == "divincenzo") {
    // c is swept at fixed b.
    out.parameter = "c";
    out.options.lo = 0.0;
    out.options.hi = 0.5;
    out.density = [base](double v) mutable {
      base.params["c"] = v;
      return make_family(base);
    };
    return out;
  }
  if (name == "bhn-line") {
    out.parameter = "mix";
    out.options.lo = 0.0;
    out.options.hi = 1.0;
    out.density = [base](double v) mutable {
      base.params["mix"] = v;
      return make_family(base);
    };
    return out;
  }
  if (name == "two-projector") {
    // Sweeps the total weight along the ray beta = kappa * alpha.
    out.parameter = "t";
    const double kappa = get_param(spec, "kappa", 1.0);
    out.options.lo = 0.0;
    out.options.hi = 1.0;
    out.expected_separable_hi = 0.25;
    out.density = [base, kappa](double v) mutable {
      base.params["alpha"] = v / (1.0 + kappa);
      base.params["beta"] = v * kappa / (1.0 + kappa);
      return make_family(base);
    };
    return out;
  }
  throw validation_error("family '" + name + "' has no sweep parameterization");
}

}  // namespace circsep
