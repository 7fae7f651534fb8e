#include "triqd/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "branch_math.hpp"

namespace triqd {

BlochVector BlochVector::from_angles(double theta, double phi) {
  return BlochVector{{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
                      std::cos(theta)}};
}

BlochVector BlochVector::from_components(double x, double y, double zc) {
  const double n = std::sqrt(x * x + y * y + zc * zc);
  if (n < 1e-14) throw std::invalid_argument("Bloch vector must be nonzero");
  return BlochVector{{x / n, y / n, zc / n}};
}

double BlochVector::norm() const { return detail::norm3(z); }

BlochVector BlochVector::negated() const { return BlochVector{{-z[0], -z[1], -z[2]}}; }

double dot(const BlochVector& x, const BlochVector& y) { return detail::dot3(x.z, y.z); }

double angular_distance(const BlochVector& x, const BlochVector& y) {
  return std::acos(std::clamp(dot(x, y), -1.0, 1.0));
}

MeasurementScheme MeasurementScheme::shared(BlochVector a, BlochVector b) {
  MeasurementScheme s;
  s.zA = a;
  s.zB_shared = b;
  return s;
}

MeasurementScheme MeasurementScheme::conditional(BlochVector a, BlochVector b0, BlochVector b1) {
  MeasurementScheme s;
  s.zA = a;
  s.zB_given_j = {b0, b1};
  return s;
}

const BlochVector& MeasurementScheme::zB_for(int j) const {
  if (zB_shared) return *zB_shared;
  if (zB_given_j) return (*zB_given_j)[j];
  throw std::invalid_argument("measurement scheme has no B axis");
}

double entropy_h(double eps, double x) {
  const double u = 1.0 + eps + x;
  const double w = 1.0 + eps - x;
  if (u < -1e-12 || w < -1e-12)
    throw std::domain_error("entropy_h operand below -1e-12");
  return 0.5 * (xlog2x(std::max(u, 0.0)) + xlog2x(std::max(w, 0.0)));
}

double entropy_h(double x) { return entropy_h(0.0, x); }

ComplexMatrix bloch_projector(const BlochVector& z, int outcome) {
  if (outcome != 0 && outcome != 1)
    throw std::invalid_argument("projector outcome must be 0 or 1");
  const double sj = outcome == 0 ? 0.5 : -0.5;
  ComplexMatrix p = ComplexMatrix::identity(2);
  p *= complexd(0.5);
  p(0, 0) += sj * z.z[2];
  p(1, 1) -= sj * z.z[2];
  p(0, 1) += sj * complexd(z.z[0], -z.z[1]);
  p(1, 0) += sj * complexd(z.z[0], z.z[1]);
  return p;
}

double cond_entropy_b_given_a(const ParamSet& p, const BlochVector& zA) {
  return detail::make_context(p, zA.z).s_b;
}

double cond_entropy_c_given_ab(const ParamSet& p, const BlochVector& zA,
                               const BlochVector& zB) {
  return detail::joint_entropy_c(detail::make_context(p, zA.z), zB.z);
}

double branch_sum_entropy_c(const ParamSet& p, const BlochVector& zA,
                            const BlochVector& zB) {
  return detail::branch_sum_entropy_c(detail::make_context(p, zA.z), zB.z);
}

double objective_g(const ParamSet& p, const BlochVector& zA) {
  return 1.0 - cond_entropy_b_given_a(p, zA);
}

double objective_f(const ParamSet& p, const BlochVector& zA, const BlochVector& zB) {
  return 2.0 - branch_sum_entropy_c(p, zA, zB);
}

double objective_gf(const ParamSet& p, const BlochVector& zA, const BlochVector& zB) {
  const detail::SchemeContext ctx = detail::make_context(p, zA.z);
  return detail::objective_gf(ctx, zB.z);
}

namespace {

ComplexMatrix maximally_mixed(int dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= complexd(1.0 / dim);
  return m;
}

}  // namespace

MeasuredBranches measured_branches(const ComplexMatrix& rho, const MeasurementScheme& scheme) {
  if (rho.dim() != 8) throw std::invalid_argument("measured_branches needs an 8x8 state");
  const ComplexMatrix i4 = ComplexMatrix::identity(4);
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  constexpr double kDead = 1e-14;

  MeasuredBranches out;
  std::array<ComplexMatrix, 2> bc_states;
  for (int j = 0; j < 2; ++j) {
    const ComplexMatrix pa = kron(bloch_projector(scheme.zA, j), i4);
    const ComplexMatrix m = pa * rho * pa;
    const double pj = m.trace().real();
    out.bc.probabilities.push_back(pj);
    bc_states[j] = pj > kDead ? complexd(1.0 / pj) * partial_trace(m, {false, true, true})
                              : maximally_mixed(4);
    out.bc.states.push_back(bc_states[j]);
  }

  for (int j = 0; j < 2; ++j) {
    const double pj = out.bc.probabilities[j];
    for (int k = 0; k < 2; ++k) {
      const ComplexMatrix pb = kron(bloch_projector(scheme.zB_for(j), k), i2);
      const ComplexMatrix m = pb * bc_states[j] * pb;
      const double pk_given_j = m.trace().real();
      const double pjk = pj * pk_given_j;
      out.c.probabilities.push_back(pjk);
      out.c.states.push_back(pk_given_j > kDead
                                 ? complexd(1.0 / pk_given_j) * partial_trace(m, {false, true})
                                 : maximally_mixed(2));
    }
  }
  return out;
}

CondEntropies cond_entropies_matrix(const ComplexMatrix& rho, const MeasurementScheme& scheme) {
  const MeasuredBranches br = measured_branches(rho, scheme);
  constexpr double kDead = 1e-14;

  CondEntropies ce{0.0, 0.0, 0.0};
  for (int j = 0; j < 2; ++j) {
    const double pj = br.bc.probabilities[j];
    if (pj > kDead)
      ce.b_given_a += pj * von_neumann_entropy(partial_trace(br.bc.states[j], {true, false}));
  }
  for (int j = 0; j < 2; ++j) {
    const double pj = br.bc.probabilities[j];
    for (int k = 0; k < 2; ++k) {
      const double pjk = br.c.probabilities[2 * j + k];
      const double s = von_neumann_entropy(br.c.states[2 * j + k]);
      ce.c_given_ab += pjk * s;
      // dead A-branch: placeholder states carry conditional weight 1/2 each
      ce.c_branch_sum += pj > kDead ? (pjk / pj) * s : 0.5 * s;
    }
  }
  return ce;
}

}  // namespace triqd
