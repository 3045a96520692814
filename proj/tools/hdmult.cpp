// hdmult: command-line front end for the Hadamard multiplier library.
//
//   hdmult verify <suite> --seed <n> --out <path.jsonl> [--csv <path>]
//   hdmult norm (--kernel <spec> | --coeffs <json>) [--trunc N]
//   hdmult bounds --coeffs <json>
//   hdmult local-dirichlet --series <json> --zeta <re,im>
//   hdmult quadrature --series <json> --atoms <json> [--levels n]
//
// JSON arguments may be given inline or as @path.  HD_TOL overrides the
// default tolerances.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hadamard/experiments.hpp"
#include "hadamard/json_io.hpp"
#include "hadamard/local_dirichlet.hpp"
#include "hadamard/multiplier.hpp"
#include "hadamard/series.hpp"
#include "hadamard/weights_quadrature.hpp"

namespace {

using hadamard::Complex;
using nlohmann::json;

std::optional<double> env_tolerance() {
  const char* raw = std::getenv("HD_TOL");
  if (!raw || !*raw) return std::nullopt;
  std::size_t used = 0;
  const double v = std::stod(raw, &used);
  if (used != std::string(raw).size() || !(v > 0.0)) throw std::invalid_argument("HD_TOL must be a positive number");
  return v;
}

json read_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot open " + arg.substr(1));
    return json::parse(in);
  }
  return json::parse(arg);
}

Complex parse_point(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw std::invalid_argument("bad point '" + text + "', expected re,im");
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) throw std::invalid_argument("bad point '" + text + "', expected re,im");
  }
  return {re, im};
}

json upper_json(double upper) { return std::isinf(upper) ? json(nullptr) : json(upper); }

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out, const std::string& csv) {
  hadamard::SuiteOptions opts;
  opts.seed = seed;
  opts.tolerance = env_tolerance();
  const auto rep = hadamard::run_suite(suite, opts);
  const auto text = rep.to_jsonl();
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << text;
  }
  if (!csv.empty()) {
    std::ofstream f(csv);
    if (!f) throw std::invalid_argument("cannot write " + csv);
    f << rep.to_csv();
  }
  for (const auto& a : rep.assertions)
    std::cerr << (a.passed ? "PASS " : "FAIL ") << "[" << a.criterion << "] " << a.description << " (observed "
              << a.observed << ")\n";
  return rep.passed() ? 0 : 1;
}

int cmd_norm(const std::string& kernel, const std::string& coeffs, std::optional<std::size_t> trunc) {
  hadamard::CoefficientSeries c;
  if (!kernel.empty())
    c = hadamard::make_kernel(hadamard::KernelSpec::parse(kernel));
  else
    c = hadamard::series_from_json(read_json_arg(coeffs));
  const hadamard::CoefficientSequence seq(c);

  json out;
  if (trunc) {
    const auto N = *trunc;
    const double v = hadamard::operator_norm(hadamard::tc_truncation(seq, N));
    const auto n = seq.last_nonzero();
    const bool exact = !n || N >= *n + 1;
    out = {{"lower", v}, {"upper", exact ? json(v) : json(nullptr)}, {"exact", exact}, {"truncation", N}};
    out["upper_infinite"] = !exact;
  } else {
    const auto est = hadamard::norm_estimate(seq, env_tolerance().value_or(1e-10));
    out = {{"lower", est.lower},
           {"upper", upper_json(est.upper)},
           {"exact", est.exact()},
           {"truncation", est.truncation},
           {"upper_infinite", est.upper_infinite()},
           {"method", est.method}};
  }
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_bounds(const std::string& coeffs) {
  const hadamard::CoefficientSequence seq(hadamard::series_from_json(read_json_arg(coeffs)));
  const auto est = hadamard::norm_estimate(seq, 1e-12);
  const auto n = seq.last_nonzero();
  const auto profile = hadamard::necsuff_profile(seq, n ? *n + 1 : 1);
  json out = {{"lower", est.lower},
              {"upper", upper_json(est.upper)},
              {"exact", est.exact()},
              {"truncation", est.truncation},
              {"bound_lower_i", hadamard::bound_lower_i(seq)},
              {"bound_upper_i", hadamard::bound_upper_i(seq)},
              {"bound_ii", hadamard::bound_ii(seq)},
              {"bound_iii", hadamard::bound_iii(seq)},
              {"necsuff",
               {{"sup_abs", profile.sup_abs},
                {"sup_sqrt_k_diff", profile.sup_sqrt_k_diff},
                {"sup_k_diff", profile.sup_k_diff}}}};
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_local_dirichlet(const std::string& series, const std::string& zeta) {
  const auto f = hadamard::series_from_json(read_json_arg(series));
  const hadamard::LocalPoint point(parse_point(zeta));
  const auto fac = hadamard::factorize_local(f, point);
  json out = {{"a", hadamard::to_json(fac.a)},
              {"g", hadamard::to_json(fac.g)},
              {"value", fac.g.h2_norm_squared()},
              {"region", point.is_boundary() ? "boundary" : "interior"},
              {"near_boundary", point.near_boundary()}};
  std::cout << out.dump() << '\n';
  return 0;
}

int cmd_quadrature(const std::string& series, const std::string& atoms, std::size_t levels) {
  const auto f = hadamard::series_from_json(read_json_arg(series));
  const auto mu = hadamard::measure_from_json(read_json_arg(atoms));
  hadamard::QuadratureGrid grid;
  grid.radial_nodes = levels;
  const auto q = hadamard::quadrature_dirichlet(f, mu, grid);
  json out = {{"value", q.value}, {"refinement_gap", q.refinement_gap}, {"coarse_value", q.coarse_value},
              {"atomic", hadamard::dirichlet_omega_atomic(f, mu)}};
  std::cout << out.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hadamard multipliers on weighted Dirichlet spaces"};
  app.require_subcommand(1);

  std::string suite, out_path, csv_path;
  std::uint64_t seed = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite and write a JSON-lines report");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(hadamard::suite_names()));
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--out", out_path, "Report path (default: stdout)");
  verify->add_option("--csv", csv_path, "Optional CSV projection of the report rows");

  std::string kernel, coeffs;
  std::optional<std::size_t> trunc;
  auto* norm = app.add_subcommand("norm", "Operator norm of the multiplier matrix T_c");
  auto* kopt = norm->add_option("--kernel", kernel, "Kernel spec, e.g. dirichlet:5 or poisson:0.9:64");
  auto* copt = norm->add_option("--coeffs", coeffs, "Coefficients c_k as JSON [[re,im],...]");
  kopt->excludes(copt);
  norm->add_option("--trunc", trunc, "Fixed truncation size N");

  std::string bcoeffs;
  auto* bounds = app.add_subcommand("bounds", "Closed-form norm bounds for a finite sequence");
  bounds->add_option("--coeffs", bcoeffs, "Coefficients c_k as JSON [[re,im],...]")->required();

  std::string series, zeta;
  auto* local = app.add_subcommand("local-dirichlet", "Local Dirichlet integral D_zeta(f)");
  local->add_option("--series", series, "Series f as JSON [[re,im],...]")->required();
  local->add_option("--zeta", zeta, "Point re,im in the closed disk")->required();

  std::string qseries, atoms;
  std::size_t levels = 8;
  auto* quad = app.add_subcommand("quadrature", "Area-integral quadrature of D_omega(f)");
  quad->add_option("--series", qseries, "Series f as JSON [[re,im],...]")->required();
  quad->add_option("--atoms", atoms, "Atoms as JSON [{\"zeta\":[re,im],\"mass\":m},...]")->required();
  quad->add_option("--levels", levels, "Radial nodes per annulus")->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(suite, seed, out_path, csv_path);
    if (*norm) {
      if (kernel.empty() && coeffs.empty()) throw std::invalid_argument("norm needs --kernel or --coeffs");
      return cmd_norm(kernel, coeffs, trunc);
    }
    if (*bounds) return cmd_bounds(bcoeffs);
    if (*local) return cmd_local_dirichlet(series, zeta);
    if (*quad) return cmd_quadrature(qseries, atoms, levels);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
