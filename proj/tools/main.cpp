// triqd: tripartite quantum discord calculator.
//
// Subcommands:
//   compute    discord of a parameter-file state (closed form and/or numeric)
//   verify     closed form vs numeric optimizer vs brute-force minimization
//   werner     CSV sweep of the Werner-GHZ discord curve
//   landscape  CSV samples of G or F on the unit sphere

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "triqd/discord.hpp"
#include "triqd/measure.hpp"
#include "triqd/oracle.hpp"
#include "triqd/states.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitInvalidState = 2;
constexpr int kExitNoCase = 3;

int g_precision = 6;

std::string num(double v, int prec = -1) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", prec > 0 ? prec : g_precision, v);
  return buf;
}

std::string vec(const triqd::BlochVector& z) {
  return "(" + num(z.z[0]) + ", " + num(z.z[1]) + ", " + num(z.z[2]) + ")";
}

triqd::ParamSet load_or_exit(const std::string& path) {
  try {
    return triqd::load_param_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::exit(kExitUsage);
  }
}

triqd::ComplexMatrix validated_state(const triqd::ParamSet& p) {
  const triqd::ComplexMatrix rho = triqd::build_state(p);
  const triqd::ValidationReport rep = triqd::validate_state(rho, p);
  if (!rep.valid) {
    std::cerr << "error: parameters do not describe a physical state (min eigenvalue "
              << num(rep.min_eigenvalue) << ")\n";
    std::exit(kExitInvalidState);
  }
  return rho;
}

void print_result(const triqd::DiscordResult& r) {
  std::cout << "discord      = " << num(r.q) << "\n";
  std::cout << "method       = " << r.method << "\n";
  std::cout << "case         = " << (r.case_id ? triqd::to_string(*r.case_id) : "none")
            << "\n";
  std::cout << "zA           = " << vec(r.zA_opt) << "\n";
  std::cout << "zB           = " << vec(r.zB_opt) << "\n";
  std::cout << "G_max        = " << num(r.g_max) << "\n";
  std::cout << "F_max        = " << num(r.f_max) << "\n";
  std::cout << "S_ABC        = " << num(r.s_abc) << "\n";
  std::cout << "S_A          = " << num(r.s_a) << "\n";
  if (r.q_printed) std::cout << "q_printed    = " << num(*r.q_printed) << "\n";
  if (r.q_at_claimed) std::cout << "q_at_claimed = " << num(*r.q_at_claimed) << "\n";
  if (r.verify_delta) {
    std::cout << "verify_delta = " << num(*r.verify_delta) << "\n";
    std::cout << "unverified   = " << (r.unverified ? "true" : "false") << "\n";
  }
}

int cmd_compute(const std::string& input, const std::string& method, int grid) {
  const triqd::ParamSet p = load_or_exit(input);
  validated_state(p);

  triqd::OptimizerOptions opts;
  if (grid > 0) {
    opts.grid_theta = grid;
    opts.grid_phi = std::max(grid / 2, 4);
  }

  if (method == "numeric") {
    print_result(triqd::discord_numeric(p, opts));
    return 0;
  }
  if (method == "closed") {
    const auto res = triqd::discord_closed_form(p, /*verify=*/false, opts);
    if (!res) {
      std::cerr << "error: no closed-form case matches this parameter set\n";
      return kExitNoCase;
    }
    print_result(*res);
    return 0;
  }
  // auto: closed form first, numeric either way; report the gap when both exist
  const auto closed = triqd::discord_closed_form(p, /*verify=*/true, opts);
  if (closed) {
    print_result(*closed);
    return 0;
  }
  print_result(triqd::discord_numeric(p, opts));
  return 0;
}

int cmd_verify(const std::string& input, int grid, bool conditional_b) {
  const triqd::ParamSet p = load_or_exit(input);
  const triqd::ComplexMatrix rho = validated_state(p);

  triqd::OptimizerOptions opts;
  triqd::OracleOptions oopts;
  if (grid > 0) {
    opts.grid_theta = grid;
    opts.grid_phi = std::max(grid / 2, 4);
    oopts.grid_theta = grid;
    oopts.grid_phi = std::max(grid / 2, 4);
  }

  const auto closed = triqd::discord_closed_form(p, /*verify=*/false, opts);
  const triqd::DiscordResult numeric = triqd::discord_numeric(p, opts);
  const triqd::OracleResult oracle = triqd::oracle_discord(rho, oopts);

  if (closed) {
    std::cout << "closed       = " << num(closed->q) << "  (case "
              << triqd::to_string(*closed->case_id) << ")\n";
    if (closed->q_printed) std::cout << "q_printed    = " << num(*closed->q_printed) << "\n";
    if (closed->q_at_claimed)
      std::cout << "q_at_claimed = " << num(*closed->q_at_claimed) << "\n";
  } else {
    std::cout << "closed       = none\n";
  }
  std::cout << "numeric      = " << num(numeric.q) << "\n";
  std::cout << "oracle       = " << num(oracle.q_branch_sum) << "\n";
  std::cout << "oracle_std   = " << num(oracle.q) << "\n";
  if (conditional_b) {
    triqd::OracleOptions copts = oopts;
    copts.conditional_b = true;
    std::cout << "oracle_cond  = " << num(triqd::oracle_discord(rho, copts).q) << "\n";
  }
  if (closed) {
    std::cout << "d_closed_numeric = " << num(std::abs(closed->q - numeric.q)) << "\n";
    std::cout << "d_closed_oracle  = " << num(std::abs(closed->q - oracle.q_branch_sum))
              << "\n";
  }
  std::cout << "d_numeric_oracle = " << num(std::abs(numeric.q - oracle.q_branch_sum))
            << "\n";
  return 0;
}

int cmd_werner(double cmin, double cmax, int steps, const std::string& out, int grid) {
  if (steps < 1 || cmin < 0.0 || cmax > 1.0 || cmin > cmax) {
    std::cerr << "error: need 0 <= c-min <= c-max <= 1 and steps >= 1\n";
    return kExitUsage;
  }
  triqd::OracleOptions oopts;
  if (grid > 0) {
    oopts.grid_theta = grid;
    oopts.grid_phi = std::max(grid / 2, 4);
  }

  std::ostringstream csv;
  csv << "c,discord_closed,discord_numeric\n";
  for (int i = 0; i < steps; ++i) {
    const double c = steps == 1 ? cmin : cmin + (cmax - cmin) * i / (steps - 1);
    const double closed = triqd::discord_werner_ghz(c);
    const double numeric = triqd::oracle_discord(triqd::build_werner_ghz(c), oopts).q;
    char row[128];
    std::snprintf(row, sizeof(row), "%.12g,%.12g,%.12g\n", c, closed, numeric);
    csv << row;
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitUsage;
    }
    f << csv.str();
  }
  return 0;
}

int cmd_landscape(const std::string& input, const std::string& which,
                  const std::string& zA_str, int samples, const std::string& out) {
  const triqd::ParamSet p = load_or_exit(input);
  validated_state(p);

  std::optional<triqd::BlochVector> zA;
  if (!zA_str.empty()) {
    double x, y, z;
    if (std::sscanf(zA_str.c_str(), "%lf,%lf,%lf", &x, &y, &z) != 3) {
      std::cerr << "error: --zA wants three comma-separated components\n";
      return kExitUsage;
    }
    try {
      zA = triqd::BlochVector::from_components(x, y, z);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  if (which == "F" && !zA) {
    std::cerr << "error: the F landscape needs --zA\n";
    return kExitUsage;
  }

  // Fibonacci sphere: near-uniform deterministic coverage
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::ostringstream csv;
  csv << "z1,z2,z3,value\n";
  for (int i = 0; i < samples; ++i) {
    const double zc = 1.0 - 2.0 * (i + 0.5) / samples;
    const double rad = std::sqrt(std::max(1.0 - zc * zc, 0.0));
    const double phi = golden * i;
    const triqd::BlochVector z{{rad * std::cos(phi), rad * std::sin(phi), zc}};
    const double value = which == "G" ? triqd::objective_g(p, z)
                                      : triqd::objective_f(p, *zA, z);
    char row[160];
    std::snprintf(row, sizeof(row), "%.12g,%.12g,%.12g,%.12g\n", z.z[0], z.z[1], z.z[2],
                  value);
    csv << row;
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitUsage;
    }
    f << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tripartite quantum discord calculator"};
  app.require_subcommand(1);
  app.add_option("--precision", g_precision, "significant digits for printed numbers")
      ->check(CLI::Range(1, 17));

  std::string input, method = "auto", which, zA_str, out;
  int grid = 0, steps = 0, samples = 1000;
  double cmin = 0.0, cmax = 1.0;
  bool conditional_b = false;

  auto* compute = app.add_subcommand("compute", "discord of a parameter-file state");
  compute->add_option("-i,--input", input, "parameter file (JSON)")->required();
  compute->add_option("--method", method, "auto|closed|numeric")
      ->check(CLI::IsMember({"auto", "closed", "numeric"}));
  compute->add_option("--grid", grid, "optimizer theta grid size");

  auto* verify = app.add_subcommand("verify", "closed form vs numeric vs brute force");
  verify->add_option("-i,--input", input, "parameter file (JSON)")->required();
  verify->add_option("--grid", grid, "grid size for both optimizers");
  verify->add_flag("--conditional-b", conditional_b,
                   "also minimize with a per-outcome B axis");

  auto* werner = app.add_subcommand("werner", "Werner-GHZ discord sweep (CSV)");
  werner->add_option("--c-min", cmin, "sweep start")->required();
  werner->add_option("--c-max", cmax, "sweep end")->required();
  werner->add_option("--steps", steps, "number of rows")->required();
  werner->add_option("-o,--output", out, "output CSV path");
  werner->add_option("--grid", grid, "brute-force grid size");

  auto* landscape = app.add_subcommand("landscape", "sample G or F on the sphere (CSV)");
  landscape->add_option("-i,--input", input, "parameter file (JSON)")->required();
  landscape->add_option("--which", which, "G or F")
      ->required()
      ->check(CLI::IsMember({"G", "F"}));
  landscape->add_option("--zA", zA_str, "A axis \"x,y,z\" (required for F)");
  landscape->add_option("--samples", samples, "number of sphere samples");
  landscape->add_option("-o,--output", out, "output CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (compute->parsed()) return cmd_compute(input, method, grid);
    if (verify->parsed()) return cmd_verify(input, grid, conditional_b);
    if (werner->parsed()) return cmd_werner(cmin, cmax, steps, out, grid);
    if (landscape->parsed()) return cmd_landscape(input, which, zA_str, samples, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
