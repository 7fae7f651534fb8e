#pragma once

#include <optional>
#include <string>

#include "triqd/measure.hpp"
#include "triqd/states.hpp"

namespace triqd {

/// Closed-form case identifiers (T2.x: 14-parameter family at the coordinate
/// poles; T3.x: the symmetric-correlation families).
enum class CaseId { T2_1, T2_2a, T2_2b, T3_1, T3_2, T3_3, T3_4, T3_5, T3_6 };

std::string to_string(CaseId id);

/// First matching case at tolerance 1e-12, or nullopt.
std::optional<CaseId> classify_case(const ParamSet& p);

struct OptimizerOptions {
  int grid_theta = 64;     // theta in [0, pi/2], inclusive
  int grid_phi = 32;       // phi in [0, 2pi)
  double refine_tol = 1e-10;
  int max_refine_iters = 500;
};

struct MaximizeResult {
  BlochVector zA, zB;
  double value;
};

/// Deterministic global maximization of G+F over both Bloch spheres:
/// joint hemisphere grid (sign-flip invariance halves each sphere), then
/// coordinate pattern search on the four angles.
MaximizeResult maximize_objective(const ParamSet& p, const OptimizerOptions& opts = {});

struct DiscordResult {
  double q = 0.0;
  BlochVector zA_opt, zB_opt;
  double g_max = 0.0, f_max = 0.0;
  double s_abc = 0.0, s_a = 0.0;
  std::string method;                      // case id | "numeric" | "werner-ghz"
  std::optional<CaseId> case_id;
  std::optional<double> q_printed;         // literal published formula, when it differs
  std::optional<double> q_at_claimed;      // objective value at the claimed maximizers,
                                           // when the primary is the published form
  std::optional<double> verify_delta;      // |q - numeric q|
  bool unverified = false;                 // verify_delta > 1e-6
};

/// Q = 3 + sum lambda log2 lambda - sum lambda^a log2 lambda^a - max(G+F).
DiscordResult discord_numeric(const ParamSet& p, const OptimizerOptions& opts = {});

/// Closed-form value for the matching case, or nullopt. With verify=true the
/// numeric optimum is computed as well and |closed - numeric| is reported;
/// deltas above 1e-6 mark the result unverified.
std::optional<DiscordResult> discord_closed_form(const ParamSet& p, bool verify = false,
                                                 const OptimizerOptions& opts = {});

/// Q(c) = (1-c)/8 log2(1-c) + (1+7c)/8 log2(1+7c) - (1+3c)/4 log2(1+3c).
double discord_werner_ghz(double c);

}  // namespace triqd
