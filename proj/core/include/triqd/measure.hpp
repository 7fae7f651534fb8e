#pragma once

#include <array>
#include <optional>
#include <vector>

#include "triqd/qmat.hpp"
#include "triqd/states.hpp"

namespace triqd {

/// Unit vector naming a projective qubit measurement,
/// Pi_j = (I + (-1)^j z.sigma)/2.
struct BlochVector {
  std::array<double, 3> z{0.0, 0.0, 1.0};

  static BlochVector from_angles(double theta, double phi);
  /// Normalizes; throws on a near-zero vector.
  static BlochVector from_components(double x, double y, double zc);
  double norm() const;
  BlochVector negated() const;
};

double dot(const BlochVector& x, const BlochVector& y);
/// Angle between two directions, in radians.
double angular_distance(const BlochVector& x, const BlochVector& y);

/// Measurement of A along zA followed by a measurement of B, either with one
/// shared axis or with a per-outcome axis pair.
struct MeasurementScheme {
  BlochVector zA;
  std::optional<BlochVector> zB_shared;
  std::optional<std::array<BlochVector, 2>> zB_given_j;

  static MeasurementScheme shared(BlochVector a, BlochVector b);
  static MeasurementScheme conditional(BlochVector a, BlochVector b0, BlochVector b1);
  const BlochVector& zB_for(int j) const;
};

struct BranchEnsemble {
  std::vector<double> probabilities;
  std::vector<ComplexMatrix> states;
};

/// Branches after the A measurement (two BC states) and after the AB
/// measurement (four C states, index 2*j + k).
struct MeasuredBranches {
  BranchEnsemble bc;
  BranchEnsemble c;
};

/// H_eps(x) = [(1+eps+x) log2(1+eps+x) + (1+eps-x) log2(1+eps-x)] / 2,
/// with 0 log2 0 := 0. Throws std::domain_error if an operand is below
/// -1e-12; tiny negatives are clamped to zero.
double entropy_h(double eps, double x);
/// H(x) = H_0(x).
double entropy_h(double x);

ComplexMatrix bloch_projector(const BlochVector& z, int outcome);

// ---- analytic path (any ParamSet state) ----

/// S_{B|Pi^A}: probability-weighted entropy of the post-measurement B states.
double cond_entropy_b_given_a(const ParamSet& p, const BlochVector& zA);

/// S_{C|Pi^{AB}} with joint branch weights p_jk (the measured conditional
/// entropy; at most 1 for a qubit C).
double cond_entropy_c_given_ab(const ParamSet& p, const BlochVector& zA,
                               const BlochVector& zB);

/// sum_j S_{C|Pi^B}(rho_j^{bc}): per-A-outcome conditional entropies summed
/// without the outcome weights, in [0, 2]. This is the flavor the closed-form
/// case formulas and the G+F objective are built on.
double branch_sum_entropy_c(const ParamSet& p, const BlochVector& zA,
                            const BlochVector& zB);

/// G = 1 - S_{B|Pi^A}.
double objective_g(const ParamSet& p, const BlochVector& zA);
/// F = 2 - branch_sum_entropy_c.
double objective_f(const ParamSet& p, const BlochVector& zA, const BlochVector& zB);
/// G + F.
double objective_gf(const ParamSet& p, const BlochVector& zA, const BlochVector& zB);

// ---- matrix path (any 8x8 density matrix) ----

MeasuredBranches measured_branches(const ComplexMatrix& rho, const MeasurementScheme& scheme);

struct CondEntropies {
  double b_given_a;       // S_{B|Pi^A}
  double c_given_ab;      // S_{C|Pi^{AB}}, joint weights
  double c_branch_sum;    // sum_j S_{C|Pi^B}(branch j)
};

CondEntropies cond_entropies_matrix(const ComplexMatrix& rho, const MeasurementScheme& scheme);

}  // namespace triqd
