#pragma once

#include "triqd/measure.hpp"
#include "triqd/qmat.hpp"

namespace triqd {

struct OracleOptions {
  int grid_theta = 48;
  int grid_phi = 24;
  bool conditional_b = false;  // allow a separate B axis per A outcome
  bool refine = true;
};

/// Brute-force minimization of the measured conditional entropies over the
/// scheme grid, built on raw projectors and partial traces only. Both
/// weightings of S_{C|Pi^{AB}} are minimized in the same sweep:
///   q            - joint weights p_jk (the standard generalized discord)
///   q_branch_sum - per-A-outcome conditional weights (the flavor the
///                  closed-form case values are built on)
struct OracleResult {
  double q = 0.0;
  double q_branch_sum = 0.0;
  MeasurementScheme scheme;             // minimizer of the standard objective
  MeasurementScheme scheme_branch_sum;
  double s_abc = 0.0, s_a = 0.0;
};

OracleResult oracle_discord(const ComplexMatrix& rho, const OracleOptions& opts = {});

/// Standard bipartite discord of a two-qubit state, measuring the first
/// factor: min over one Bloch sphere of S_{C|Pi^B} - (S_BC - S_B).
double bipartite_discord(const ComplexMatrix& rho4, const OracleOptions& opts = {});

}  // namespace triqd
