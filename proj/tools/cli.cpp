#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "casimir/cavity.hpp"
#include "casimir/constants.hpp"
#include "casimir/force.hpp"
#include "casimir/greens.hpp"
#include "casimir/stack_io.hpp"

namespace casimir::cli {
namespace {

constexpr double kGreensThreshold = 1e-10;

struct Options {
  std::string stack_file;
  std::string cavity_file;
  std::size_t layer = 0;
  double rel_tol = 1e-8;
  std::int64_t max_evals = 10'000'000;
  bool normalized = false;
  std::string vary;
  double from = 0.0;
  double to = 0.0;
  std::size_t points = 0;
  std::string csv_out;
  std::size_t probe = 0;
  std::uint64_t seed = 20020718;
  int greens_stacks = 10;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuadratureSpec spec_of(const Options& o) {
  QuadratureSpec spec;
  spec.rel_tol = o.rel_tol;
  spec.max_evals = o.max_evals;
  spec.validate();
  return spec;
}

void print(std::ostream& out, const std::string& key, double v) {
  out << key << '=' << format_number(v) << '\n';
}

int report(std::ostream& out, const QuadratureResult& q, double error_scale = 1.0) {
  print(out, "abs_err", q.abs_error_estimate * error_scale);
  out << "evals=" << q.evals << '\n';
  out << "converged=" << (q.converged ? "true" : "false") << '\n';
  return q.converged ? kOk : kNotConverged;
}

double hbar_c() { return constants::hbar * constants::c; }

int cmd_force(const Options& o, std::ostream& out) {
  const Stack stack = parse_stack(read_file(o.stack_file));
  const ForceResult f = force_per_area(stack, o.layer, spec_of(o));
  if (o.normalized) {
    const double d = stack.thickness(o.layer);
    const double scale = std::pow(d, 4) / hbar_c();
    print(out, "f_minus_normalized", f.f_minus * scale);
    return report(out, f.quadrature, scale);
  }
  print(out, "f_minus_Pa", f.f_minus);
  print(out, "f_plus_Pa", f.f_plus);
  return report(out, f.quadrature);
}

int cmd_energy(const Options& o, std::ostream& out) {
  const Stack stack = parse_stack(read_file(o.stack_file));
  const EnergyResult e = energy_per_area(stack, o.layer, spec_of(o));
  if (o.normalized) {
    const double d = stack.thickness(o.layer);
    const double scale = std::pow(d, 3) / hbar_c();
    print(out, "energy_normalized", e.energy * scale);
    return report(out, e.quadrature, scale);
  }
  print(out, "energy_J_per_m2", e.energy);
  return report(out, e.quadrature);
}

int cmd_slab(const Options& o, std::ostream& out) {
  const CavityConfig cfg = parse_cavity(read_file(o.cavity_file));
  const SlabForceResult f = slab_in_cavity_force(cfg, spec_of(o));
  if (o.normalized) {
    const double scale = std::pow(cfg.d1, 4) / hbar_c();
    print(out, "force_normalized", f.force * scale);
    return report(out, f.quadrature, scale);
  }
  print(out, "force_Pa", f.force);
  return report(out, f.quadrature);
}

int cmd_force_1d(const Options& o, std::ostream& out) {
  const Stack stack = parse_stack(read_file(o.stack_file));
  const ForceResult f = force_1d(stack, o.layer, spec_of(o));
  print(out, "f_1d", f.f_minus);
  return report(out, f.quadrature);
}

int cmd_sweep(const Options& o, std::ostream& out) {
  static const std::regex pattern(R"(layer:(\d+):thickness)");
  std::smatch m;
  if (!std::regex_match(o.vary, m, pattern)) {
    throw InputError("--vary must look like layer:J:thickness");
  }
  const std::size_t varied = std::stoul(m[1].str());
  const std::size_t probe = o.probe == 0 && varied != 0 ? varied : o.probe;
  if (o.points < 1) throw InputError("--points must be >= 1");
  if (!(o.from > 0.0) || !(o.to > 0.0)) throw InputError("--from and --to must be > 0");
  const Stack base = parse_stack(read_file(o.stack_file));
  (void)base.thickness(varied);
  const QuadratureSpec spec = spec_of(o);

  std::ofstream csv(o.csv_out);
  if (!csv) throw InputError("cannot write " + o.csv_out);
  const std::string header = "distance_m,f_minus_Pa,abs_err,evals,converged";
  csv << header << '\n';
  out << header << '\n';
  bool all_converged = true;
  for (std::size_t i = 0; i < o.points; ++i) {
    const double t = o.points == 1 ? 0.0 : static_cast<double>(i) / (o.points - 1);
    const double d = o.from + (o.to - o.from) * t;
    const ForceResult f = force_per_area(base.with_thickness(varied, d), probe, spec);
    all_converged = all_converged && f.quadrature.converged;
    const std::string row = format_number(d) + ',' + format_number(f.f_minus) + ',' +
                            format_number(f.quadrature.abs_error_estimate) + ',' +
                            std::to_string(f.quadrature.evals) + ',' +
                            (f.quadrature.converged ? "true" : "false");
    csv << row << '\n';
    out << row << '\n';
  }
  return all_converged ? kOk : kNotConverged;
}

int cmd_verify_greens(const Options& o, std::ostream& out) {
  const GreensCheck check = verify_greens(o.seed, o.greens_stacks);
  print(out, "max_z_variation", check.max_z_variation);
  print(out, "max_closed_form_deviation", check.max_closed_form_deviation);
  out << "cases=" << check.cases << '\n';
  const bool ok = check.max_z_variation < kGreensThreshold &&
                  check.max_closed_form_deviation < kGreensThreshold;
  out << "passed=" << (ok ? "true" : "false") << '\n';
  return ok ? kOk : kVerificationFailed;
}

void add_quadrature_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--rel-tol", o.rel_tol, "Relative tolerance of the quadrature")
      ->capture_default_str();
  cmd->add_option("--max-evals", o.max_evals, "Integrand evaluation budget")
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Zero-temperature Casimir pressure and energy in planar multilayers", "casimir"};
  app.require_subcommand(1);

  auto* force = app.add_subcommand("force", "Force per unit area in a lossless layer");
  force->add_option("--stack", o.stack_file, "Stack file (JSON)")->required();
  force->add_option("--layer", o.layer, "Index of the probed layer")->required();
  force->add_flag("--normalized", o.normalized,
                  "Report f d^4 / (hbar c), d the probed layer thickness");
  add_quadrature_flags(force, o);

  auto* energy = app.add_subcommand("energy", "Casimir energy per unit area in a lossless layer");
  energy->add_option("--stack", o.stack_file, "Stack file (JSON)")->required();
  energy->add_option("--layer", o.layer, "Index of the probed layer")->required();
  energy->add_flag("--normalized", o.normalized,
                   "Report E d^3 / (hbar c), d the probed layer thickness");
  add_quadrature_flags(energy, o);

  auto* slab = app.add_subcommand("slab-cavity", "Force on a slab inside a planar cavity");
  slab->add_option("--cavity", o.cavity_file, "Cavity file (JSON)")->required();
  slab->add_flag("--normalized", o.normalized, "Report f d1^4 / (hbar c)");
  add_quadrature_flags(slab, o);

  auto* sweep = app.add_subcommand("sweep", "Force versus layer thickness, written as CSV");
  sweep->add_option("--stack", o.stack_file, "Stack file (JSON)")->required();
  sweep->add_option("--vary", o.vary, "Swept quantity, layer:J:thickness")->required();
  sweep->add_option("--from", o.from, "First thickness [m]")->required();
  sweep->add_option("--to", o.to, "Last thickness [m]")->required();
  sweep->add_option("--points", o.points, "Number of rows")->required();
  sweep->add_option("--out", o.csv_out, "Output CSV path")->required();
  sweep->add_option("--layer", o.probe, "Probed layer (defaults to the swept layer)");
  add_quadrature_flags(sweep, o);

  auto* greens = app.add_subcommand(
      "verify-greens", "Check z-uniformity of the Green-function stress on random absorbing stacks");
  greens->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  greens->add_option("--stacks", o.greens_stacks, "Number of random stacks")->capture_default_str();

  auto* f1d = app.add_subcommand("force-1d", "Normal-incidence (k = 0) force in a layer");
  f1d->add_option("--stack", o.stack_file, "Stack file (JSON)")->required();
  f1d->add_option("--layer", o.layer, "Index of the probed layer")->required();
  add_quadrature_flags(f1d, o);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInputError;
  }

  try {
    if (*force) return cmd_force(o, out);
    if (*energy) return cmd_energy(o, out);
    if (*slab) return cmd_slab(o, out);
    if (*sweep) return cmd_sweep(o, out);
    if (*greens) return cmd_verify_greens(o, out);
    if (*f1d) return cmd_force_1d(o, out);
  } catch (const std::logic_error& e) {
    // InputError, ModelError, PoleError and std::stoul failures.
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << app.help();
  return kInputError;
}

}  // namespace casimir::cli
