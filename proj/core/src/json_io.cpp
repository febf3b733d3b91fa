#include "circsep/json_io.hpp"

#include <cmath>

#include "json.hpp"

#include "circsep/version.hpp"

namespace circsep {

using json = nlohmann::ordered_json;

namespace {

json complex_pairs(const Matrix& m) {
  json entries = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      entries.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
  return entries;
}

Matrix matrix_from_pairs(const json& entries, int rows, int cols, const char* what) {
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows * cols)
    throw validation_error(std::string(what) + ": expected " + std::to_string(rows * cols) +
                           " [re, im] pairs");
  Matrix m(rows, cols);
  int i = 0;
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2)
      throw validation_error(std::string(what) + ": entries must be [re, im] pairs");
    m(i / cols, i % cols) = cxd(e[0].get<double>(), e[1].get<double>());
    ++i;
  }
  return m;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw validation_error(std::string("invalid JSON: ") + err.what());
  }
}

PermutationZd permutation_from(const json& j, int d) {
  if (j.is_null()) return PermutationZd::identity(d);
  std::vector<int> values;
  for (const auto& v : j) values.push_back(v.get<int>());
  PermutationZd p(std::move(values));
  if (p.d() != d) throw validation_error("permutation length does not match d");
  return p;
}

FamilySpec family_spec_from(const json& j) {
  FamilySpec spec;
  spec.family = j.at("family").get<std::string>();
  if (j.contains("d")) spec.d = j["d"].get<int>();
  if (spec.family == "horodecki") spec.d = 3;
  if (spec.family == "two-projector") spec.d = 3;
  if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("permutation") && !j["permutation"].is_null())
    for (const auto& v : j["permutation"]) spec.permutation.push_back(v.get<int>());
  for (const auto& [key, value] : j.items()) {
    if (key == "family" || key == "d" || key == "seed" || key == "permutation") continue;
    if (value.is_number()) spec.params[key] = value.get<double>();
  }
  return spec;
}

}  // namespace

std::string density_to_json(const DensityMatrix& dm, int indent) {
  json j;
  j["d"] = dm.d;
  j["permutation"] = dm.pattern.values();
  j["entries"] = complex_pairs(dm.rho);
  return j.dump(indent);
}

DensityMatrix density_from_json(const std::string& text) {
  const json j = parse(text);
  if (j.contains("family")) {
    return make_family(family_spec_from(j));
  }
  if (!j.contains("d")) throw validation_error("density JSON: missing \"d\"");
  const int d = j["d"].get<int>();
  if (d < 2) throw validation_error("density JSON: d must be >= 2");
  const PermutationZd p = permutation_from(j.contains("permutation") ? j["permutation"] : json(),
                                           d);
  if (j.contains("blocks")) {
    ClassBlocks blocks{d, p, {}};
    if (static_cast<int>(j["blocks"].size()) != d)
      throw validation_error("density JSON: need d class blocks");
    for (const auto& b : j["blocks"])
      blocks.blocks.push_back(matrix_from_pairs(b, d, d, "class block"));
    return from_class_blocks(blocks);
  }
  if (j.contains("x")) {
    ProductEntrySpec spec;
    spec.d = d;
    const Matrix x = matrix_from_pairs(j["x"], d, d, "product-entry x");
    for (int n = 0; n < d; ++n)
      for (int r = 0; r < d; ++r) spec.x.push_back(x(n, r));
    for (const auto& v : j.at("diagonal")) spec.diagonal.push_back(v.get<double>());
    return product_entry_density(spec);
  }
  if (!j.contains("entries")) throw validation_error("density JSON: missing \"entries\"");
  DensityMatrix dm{d, matrix_from_pairs(j["entries"], d * d, d * d, "density"), p};
  validate_density(dm);
  return dm;
}

std::string pattern_to_json(const SupportPattern& pattern, int indent) {
  json j;
  j["d"] = pattern.d();
  if (pattern.is_galois())
    j["gf"] = pattern.d();
  else
    j["permutation"] = pattern.permutation().values();
  json classes = json::array();
  for (const auto& cls : pattern.classes()) {
    json positions = json::array();
    for (const auto& [r, s] : cls.positions) positions.push_back(json::array({r, s}));
    classes.push_back(positions);
  }
  j["classes"] = classes;
  return j.dump(indent);
}

std::string product_spec_to_json(const ProductEntrySpec& spec, int indent) {
  json j;
  j["d"] = spec.d;
  json x = json::array();
  for (const auto& v : spec.x) x.push_back(json::array({v.real(), v.imag()}));
  j["x"] = x;
  j["diagonal"] = spec.diagonal;
  return j.dump(indent);
}

ProductEntrySpec product_spec_from_json(const std::string& text) {
  const json j = parse(text);
  ProductEntrySpec spec;
  spec.d = j.at("d").get<int>();
  const Matrix x = matrix_from_pairs(j.at("x"), spec.d, spec.d, "product-entry x");
  for (int n = 0; n < spec.d; ++n)
    for (int r = 0; r < spec.d; ++r) spec.x.push_back(x(n, r));
  for (const auto& v : j.at("diagonal")) spec.diagonal.push_back(v.get<double>());
  return spec;
}

FullAnalysis run_full_analysis(const DensityMatrix& dm, const CertifyOptions& opts) {
  FullAnalysis out;
  validate_density(dm);
  out.ppt = ppt_blocks(dm, opts.eig_tolerance);
  out.state_psd = is_psd(dm.rho, opts.eig_tolerance);
  out.full_partial_transpose = is_psd(partial_transpose(dm.rho, dm.d), opts.eig_tolerance);
  out.l1 = spin_l1_condition(dm);
  out.certify_supported = is_prime(dm.d);
  if (out.certify_supported) out.verdict = certify(dm, opts);
  return out;
}

namespace {

json verdict_json(const Verdict& verdict) {
  json v;
  v["verdict"] = to_string(verdict.kind);
  v["mu_sum"] = verdict.mu_sum;
  v["min_diag"] = verdict.min_diagonal;
  v["ppt_min_eigs"] = verdict.ppt.class_min_eigenvalues;
  if (verdict.kind == VerdictKind::Inconclusive) v["shortfall"] = verdict.shortfall;
  if (verdict.kind == VerdictKind::Entangled) v["witness_class"] = verdict.ppt.witness_class;
  if (verdict.certificate) {
    const auto& cert = *verdict.certificate;
    json jc;
    json terms = json::array();
    for (const auto& term : cert.terms) {
      terms.push_back(json{{"weight", term.weight},
                           {"a1", term.a1},
                           {"m1", term.m1},
                           {"a2", term.a2},
                           {"m2", term.m2}});
    }
    jc["terms"] = terms;
    jc["identity_weight"] = cert.identity_weight;
    jc["remainder"] = cert.remainder;
    jc["residual"] = cert.residual;
    if (!cert.relabel.is_identity()) jc["relabel"] = cert.relabel.values();
    v["certificate"] = jc;
  } else {
    v["certificate"] = nullptr;
  }
  return v;
}

}  // namespace

std::string verdict_to_json(const Verdict& verdict, int indent) {
  return verdict_json(verdict).dump(indent);
}

std::string analysis_report_json(const DensityMatrix& dm, const FullAnalysis& analysis,
                                 const std::string& input_echo, int indent) {
  json j;
  j["input"] = input_echo;
  j["library_version"] = kVersion;
  j["d"] = dm.d;
  j["permutation"] = dm.pattern.values();
  std::string verdict = "inconclusive";
  if (analysis.verdict) {
    verdict = to_string(analysis.verdict->kind);
  } else if (!analysis.ppt.ppt || !analysis.state_psd.psd) {
    verdict = "entangled";
  }
  j["verdict"] = verdict;
  j["certify_supported"] = analysis.certify_supported;
  j["l1_sum"] = analysis.l1.l1_sum;
  j["l1_condition"] = analysis.l1.within_bound;
  if (analysis.verdict) {
    j["mu_sum"] = analysis.verdict->mu_sum;
    j["min_diag"] = analysis.verdict->min_diagonal;
    j["certificate"] = verdict_json(*analysis.verdict)["certificate"];
    if (analysis.verdict->kind == VerdictKind::Inconclusive)
      j["shortfall"] = analysis.verdict->shortfall;
  }
  j["ppt_min_eigs"] = analysis.ppt.class_min_eigenvalues;
  json checks = json::array();
  checks.push_back(json{{"name", "state_psd"}, {"pass", analysis.state_psd.psd},
                        {"min_eig", analysis.state_psd.min_eigenvalue}});
  checks.push_back(json{{"name", "ppt_blocks"}, {"pass", analysis.ppt.ppt}});
  checks.push_back(json{{"name", "ppt_full_partial_transpose"},
                        {"pass", analysis.full_partial_transpose.psd},
                        {"min_eig", analysis.full_partial_transpose.min_eigenvalue}});
  checks.push_back(json{{"name", "ppt_routes_agree"},
                        {"pass", analysis.ppt.ppt == analysis.full_partial_transpose.psd}});
  j["checks"] = checks;
  return j.dump(indent);
}

std::string sweep_report_json(const SweepResult& result, const SweepFamily& family,
                              const std::string& input_echo, int indent) {
  json j;
  j["input"] = input_echo;
  j["library_version"] = kVersion;
  j["parameter"] = family.parameter;
  auto edge = [](double v) -> json {
    if (std::isnan(v)) return nullptr;
    return v;
  };
  j["separable_boundary"] =
      json{{"interval", result.separable_interval},
           {"lower", edge(result.separable_lo)},
           {"upper", edge(result.separable_hi)}};
  j["ppt_boundary"] = json{{"interval", result.ppt_interval},
                           {"lower", edge(result.ppt_lo)},
                           {"upper", edge(result.ppt_hi)}};
  j["expected"] = json{{"separable_upper", edge(family.expected_separable_hi)},
                       {"ppt_upper", edge(family.expected_ppt_hi)}};
  json scan = json::array();
  for (const auto& row : result.scan)
    scan.push_back(json{{"parameter", row.parameter},
                        {"valid", row.valid},
                        {"separable", row.separable},
                        {"ppt", row.ppt}});
  j["scan"] = scan;
  return j.dump(indent);
}

}  // namespace circsep
