#pragma once

// Internal analytic machinery for measurement-conditional entropies on the
// Pauli-coefficient family. Shared by measure.cpp and discord.cpp; not
// installed.

#include <array>
#include <cmath>

#include "triqd/states.hpp"

namespace triqd::detail {

using Vec3 = std::array<double, 3>;

inline double dot3(const Vec3& x, const Vec3& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}
inline double norm3(const Vec3& x) { return std::sqrt(dot3(x, x)); }

inline double xlog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// H_eps(x) without the domain check; operands are clamped at zero. Used in
// hot loops where positivity is guaranteed by state validity.
inline double h_eps(double eps, double x) {
  const double u = 1.0 + eps + x;
  const double w = 1.0 + eps - x;
  return 0.5 * (xlog2(u > 0.0 ? u : 0.0) + xlog2(w > 0.0 ? w : 0.0));
}
inline double h0(double x) { return h_eps(0.0, x); }

// Data of one A-outcome branch of a ParamSet state: the unnormalized BC
// operator is (q I + m.sigma x I + I x n.sigma + sum_i k_i s_i x s_i)/4,
// so p_j = q/2.
struct ABranch {
  double q;
  Vec3 m, n, k;
};

struct SchemeContext {
  std::array<ABranch, 2> br;
  double s_b;  // S_{B|Pi^A}
};

inline SchemeContext make_context(const ParamSet& p, const Vec3& zA) {
  SchemeContext ctx;
  const double eps = p.a[0] * zA[0] + p.a[1] * zA[1] + p.a[2] * zA[2];
  double sb = 0.0;
  for (int j = 0; j < 2; ++j) {
    const double sj = j == 0 ? 1.0 : -1.0;
    ABranch& br = ctx.br[j];
    br.q = 1.0 + sj * eps;
    for (int i = 0; i < 3; ++i) {
      br.m[i] = p.b[i] + sj * p.r[i] * zA[i];
      br.n[i] = p.c[i] + sj * p.s[i] * zA[i];
      br.k[i] = p.v[i] + sj * p.t[i] * zA[i];
    }
    if (br.q < 1e-14) continue;  // weight-zero branch
    double g = norm3(br.m) / br.q;
    if (g > 1.0) g = 1.0;
    sb += (br.q / 2.0) * (1.0 - h0(g));
  }
  ctx.s_b = sb;
  return ctx;
}

// Conditional entropy of C within branch j after the B measurement along zB:
// sum_k p_{k|j} S(rho^c_{jk}). A weight-zero branch reads as the maximally
// mixed placeholder (entropy 1); the joint weighting kills it anyway.
inline double branch_entropy_c(const ABranch& br, const Vec3& zB) {
  if (br.q < 1e-14) return 1.0;
  const double mz = dot3(br.m, zB);
  const double et = mz / br.q;
  double acc = 0.0;
  for (int k = 0; k < 2; ++k) {
    const double sk = k == 0 ? 1.0 : -1.0;
    Vec3 w{br.n[0] + sk * br.k[0] * zB[0], br.n[1] + sk * br.k[1] * zB[1],
           br.n[2] + sk * br.k[2] * zB[2]};
    acc += h_eps(sk * et, norm3(w) / br.q);
  }
  return 1.0 - 0.5 * (acc - 2.0 * h0(et));
}

// S_{C|Pi^{AB}} with the standard joint weights p_{jk}.
inline double joint_entropy_c(const SchemeContext& ctx, const Vec3& zB) {
  double acc = 0.0;
  for (int j = 0; j < 2; ++j)
    acc += (ctx.br[j].q / 2.0) * branch_entropy_c(ctx.br[j], zB);
  return acc;
}

// sum_j S_{C|Pi^B}(branch j): the flavor entering the G+F objective.
inline double branch_sum_entropy_c(const SchemeContext& ctx, const Vec3& zB) {
  return branch_entropy_c(ctx.br[0], zB) + branch_entropy_c(ctx.br[1], zB);
}

// G + F = (1 - S_{B|Pi^A}) + (2 - sum_j S_{C|Pi^B}(branch j)).
inline double objective_gf(const SchemeContext& ctx, const Vec3& zB) {
  return 3.0 - ctx.s_b - branch_sum_entropy_c(ctx, zB);
}

}  // namespace triqd::detail
