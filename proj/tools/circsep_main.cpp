// circsep: build circulant densities, check PPT, produce separability
// certificates, sweep family thresholds, and render support patterns.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "circsep/analysis.hpp"
#include "circsep/density.hpp"
#include "circsep/families.hpp"
#include "circsep/geometry.hpp"
#include "circsep/json_io.hpp"
#include "circsep/version.hpp"

namespace {

using circsep::validation_error;

bool color_enabled() { return std::getenv("CIRCSEP_NO_COLOR") == nullptr; }

std::string paint(const std::string& text, const char* code) {
  if (!color_enabled()) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_text(const std::string& verdict) {
  if (verdict == "separable") return paint("SEPARABLE", "32");
  if (verdict == "entangled") return paint("ENTANGLED", "31");
  return paint("INCONCLUSIVE", "33");
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream os(out_path);
  if (!os) throw validation_error("cannot open output file: " + out_path);
  os << text;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw validation_error("cannot open input file: " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::vector<int> parse_permutation(const std::string& text) {
  std::vector<int> values;
  std::string token;
  for (char ch : text) {
    if (ch == '[' || ch == ']' || ch == ' ') continue;
    if (ch == ',') {
      if (!token.empty()) values.push_back(std::stoi(token));
      token.clear();
    } else {
      token += ch;
    }
  }
  if (!token.empty()) values.push_back(std::stoi(token));
  return values;
}

struct FamilyFlags {
  std::string family;
  int d = 3;
  double lambda = 0.0, alpha = 0.0, beta = 0.0, p = 0.0, b = 0.0, c = 0.0;
  double mix = -1.0, kappa = 1.0;
  int s = 0, t = 0;
  bool vertical = false;
  std::uint64_t seed = 20240831;
  std::string permutation;

  void add_options(CLI::App* cmd) {
    cmd->add_option("--family", family, "named family: isotropic|werner|divincenzo|horodecki|bhn-line|two-projector|random");
    cmd->add_option("--d", d, "local dimension");
    cmd->add_option("--lambda", lambda, "isotropic parameter");
    cmd->add_option("--alpha", alpha, "horodecki / two-projector parameter");
    cmd->add_option("--beta", beta, "two-projector parameter");
    cmd->add_option("--p", p, "werner parameter");
    cmd->add_option("--b", b, "divincenzo parameter");
    cmd->add_option("--c", c, "divincenzo parameter");
    cmd->add_option("--s", s, "bhn-line slope");
    cmd->add_option("--t", t, "bhn-line intercept (or vertical column)");
    cmd->add_flag("--vertical", vertical, "use the vertical bhn line family");
    cmd->add_option("--mix", mix, "mix with identity: (1-t)/d^2 I + t rho");
    cmd->add_option("--kappa", kappa, "two-projector sweep ray beta = kappa*alpha");
    cmd->add_option("--seed", seed, "seed for the random family");
    cmd->add_option("--permutation", permutation, "circulant permutation, e.g. [0,2,1]");
  }

  circsep::FamilySpec to_spec(const CLI::App* cmd) const {
    circsep::FamilySpec spec;
    spec.family = family;
    spec.d = d;
    spec.seed = seed;
    if (!permutation.empty()) spec.permutation = parse_permutation(permutation);
    auto set_if = [&](const char* flag, const char* key, double value) {
      if (cmd->count(flag) > 0) spec.params[key] = value;
    };
    set_if("--lambda", "lambda", lambda);
    set_if("--alpha", "alpha", alpha);
    set_if("--beta", "beta", beta);
    set_if("--p", "p", p);
    set_if("--b", "b", b);
    set_if("--c", "c", c);
    set_if("--s", "s", s);
    set_if("--t", "t", t);
    set_if("--kappa", "kappa", kappa);
    if (vertical) spec.params["vertical"] = 1.0;
    if (mix >= 0.0) spec.params["mix"] = mix;
    return spec;
  }

  std::string echo(const CLI::App* cmd) const {
    std::ostringstream os;
    os << "family:" << family << " d:" << d;
    for (const auto& [key, value] : to_spec(cmd).params) os << " " << key << ":" << value;
    return os.str();
  }
};

circsep::DensityMatrix load_density(const std::string& input_file, const FamilyFlags& flags,
                                    const CLI::App* cmd, std::string& echo) {
  if (!input_file.empty()) {
    echo = input_file;
    return circsep::density_from_json(read_file(input_file));
  }
  if (flags.family.empty())
    throw validation_error("need either a density JSON file or --family");
  echo = flags.echo(cmd);
  return circsep::make_family(flags.to_spec(cmd));
}

int run(int argc, char** argv) {
  CLI::App app{"circulant bipartite densities: PPT block checks and constructive separability certificates"};
  app.set_version_flag("--version", circsep::kVersion);
  app.require_subcommand(1);
  app.fallthrough(true);

  std::string out_path, format, input_file;  // empty format = per-command default
  double tol_eig = circsep::tol::eigenvalue, tol_recon = circsep::tol::reconstruction;
  app.add_option("--out", out_path, "output file (default: stdout)")->capture_default_str();
  app.add_option("--format", format, "json|text (render: text|svg|json; defaults: render text, others json)")
      ->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--tol-eig", tol_eig, "eigenvalue tolerance for PSD verdicts")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-recon", tol_recon, "reconstruction residual tolerance")
      ->check(CLI::PositiveNumber);

  FamilyFlags build_flags, analyze_flags, sweep_flags;

  auto* cmd_build = app.add_subcommand("build", "construct a density and write it as JSON");
  build_flags.add_options(cmd_build);
  std::string blocks_file, product_file;
  cmd_build->add_option("--blocks", blocks_file, "assemble from a class-blocks JSON file");
  cmd_build->add_option("--product-spec", product_file, "assemble from a product-entry JSON spec");

  auto* cmd_analyze = app.add_subcommand("analyze", "run PPT checks, the l1 test and the certificate");
  cmd_analyze->add_option("input", input_file, "density JSON file");
  analyze_flags.add_options(cmd_analyze);

  auto* cmd_sweep = app.add_subcommand("sweep", "bisect separability/PPT thresholds of a family");
  sweep_flags.add_options(cmd_sweep);
  double sweep_lo = -1.0, sweep_hi = -1.0, sweep_precision = 1e-6;
  int sweep_points = 0;
  cmd_sweep->add_option("--lo", sweep_lo, "scan lower bound (default: family-specific)");
  cmd_sweep->add_option("--hi", sweep_hi, "scan upper bound");
  cmd_sweep->add_option("--points", sweep_points, "scan grid size");
  cmd_sweep->add_option("--precision", sweep_precision, "bisection precision")
      ->check(CLI::PositiveNumber);

  auto* cmd_render = app.add_subcommand("render", "render a support pattern (dot/x_k art, SVG or JSON)");
  int render_d = 3, render_gf = 0;
  std::string render_perm;
  cmd_render->add_option("--d", render_d, "dimension");
  cmd_render->add_option("--gf", render_gf, "render the GF(q) pattern instead (q = 4, 8, 9)");
  cmd_render->add_option("--permutation", render_perm, "circulant permutation, e.g. [0,2,1]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  circsep::CertifyOptions opts;
  opts.eig_tolerance = tol_eig;
  opts.recon_tolerance = tol_recon;

  if (cmd_build->parsed()) {
    circsep::DensityMatrix dm;
    if (!blocks_file.empty() || !product_file.empty()) {
      const std::string& path = !blocks_file.empty() ? blocks_file : product_file;
      dm = circsep::density_from_json(read_file(path));
    } else {
      if (build_flags.family.empty()) throw validation_error("build: need --family, --blocks or --product-spec");
      dm = circsep::make_family(build_flags.to_spec(cmd_build));
    }
    write_output(circsep::density_to_json(dm), out_path);
    return 0;
  }

  if (cmd_analyze->parsed()) {
    std::string echo;
    const circsep::DensityMatrix dm = load_density(input_file, analyze_flags, cmd_analyze, echo);
    const auto t0 = std::chrono::steady_clock::now();
    const circsep::FullAnalysis analysis = circsep::run_full_analysis(dm, opts);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (format == "text") {
      std::ostringstream os;
      std::string verdict = analysis.verdict
                                ? circsep::to_string(analysis.verdict->kind)
                                : (analysis.ppt.ppt && analysis.state_psd.psd ? "inconclusive"
                                                                              : "entangled");
      os << "input: " << echo << "\n";
      os << "verdict: " << verdict_text(verdict) << "\n";
      os << "state PSD: " << (analysis.state_psd.psd ? "yes" : "no")
         << " (min eig " << analysis.state_psd.min_eigenvalue << ")\n";
      os << "PPT (block method): " << (analysis.ppt.ppt ? "yes" : "no")
         << ", PPT (full partial transpose): " << (analysis.full_partial_transpose.psd ? "yes" : "no")
         << "\n";
      os << "spin l1 sum: " << analysis.l1.l1_sum
         << (analysis.l1.within_bound ? " (<= 2, separable)" : " (> 2)") << "\n";
      if (analysis.verdict) {
        os << "mu sum: " << analysis.verdict->mu_sum
           << ", min diagonal: " << analysis.verdict->min_diagonal << "\n";
        if (analysis.verdict->certificate)
          os << "certificate: " << analysis.verdict->certificate->terms.size()
             << " product terms, residual " << analysis.verdict->certificate->residual << "\n";
      }
      write_output(os.str(), out_path);
    } else {
      nlohmann::ordered_json j =
          nlohmann::ordered_json::parse(circsep::analysis_report_json(dm, analysis, echo));
      j["timing_ms"] = ms;
      write_output(j.dump(2), out_path);
    }
    return 0;
  }

  if (cmd_sweep->parsed()) {
    if (sweep_flags.family.empty()) throw validation_error("sweep: need --family");
    circsep::SweepFamily family = circsep::make_sweep_family(sweep_flags.to_spec(cmd_sweep));
    if (sweep_lo >= 0.0) family.options.lo = sweep_lo;
    if (sweep_hi >= 0.0) family.options.hi = sweep_hi;
    if (sweep_points > 0) family.options.scan_points = sweep_points;
    family.options.precision = sweep_precision;
    family.options.certify = opts;
    const circsep::SweepResult result = circsep::sweep_threshold(family.density, family.options);
    if (format == "text") {
      std::ostringstream os;
      os << "family: " << sweep_flags.family << " (parameter " << family.parameter << ")\n";
      auto show = [&](const char* name, bool interval, double lo, double hi, double expected) {
        os << name << ": ";
        if (std::isnan(lo)) {
          os << "empty";
        } else if (!interval) {
          os << "not a single interval; see scan";
        } else {
          os << "[" << lo << ", " << hi << "]";
          if (!std::isnan(expected)) os << " (literature upper boundary " << expected << ")";
        }
        os << "\n";
      };
      show("separable", result.separable_interval, result.separable_lo, result.separable_hi,
           family.expected_separable_hi);
      show("ppt", result.ppt_interval, result.ppt_lo, result.ppt_hi, family.expected_ppt_hi);
      write_output(os.str(), out_path);
    } else {
      write_output(circsep::sweep_report_json(result, family, sweep_flags.echo(cmd_sweep)),
                   out_path);
    }
    return 0;
  }

  if (cmd_render->parsed()) {
    if (format.empty()) format = "text";
    circsep::SupportPattern pattern = [&] {
      if (render_gf != 0) return circsep::gf_support_pattern(circsep::GfAddTable::of(render_gf));
      const circsep::PermutationZd p =
          render_perm.empty() ? circsep::PermutationZd::identity(render_d)
                              : circsep::PermutationZd(parse_permutation(render_perm));
      return circsep::support_pattern(render_d, p);
    }();
    if (format == "svg")
      write_output(circsep::render_pattern_svg(pattern), out_path);
    else if (format == "json")
      write_output(circsep::pattern_to_json(pattern), out_path);
    else
      write_output(circsep::render_pattern(pattern), out_path);
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const circsep::validation_error& err) {
    std::cerr << paint("validation error: ", "31") << err.what() << "\n";
    return 2;
  } catch (const circsep::numeric_error& err) {
    std::cerr << paint("numerical failure: ", "31") << err.what() << "\n";
    return 3;
  } catch (const std::exception& err) {
    std::cerr << paint("error: ", "31") << err.what() << "\n";
    return 2;
  }
}
