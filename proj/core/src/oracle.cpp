#include "triqd/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "triqd/states.hpp"

namespace triqd {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDead = 1e-14;

using Ket = std::array<complexd, 2>;

// Eigenvector of z.sigma for the (+1)^outcome eigenvalue; the rank-1
// projector (I + (-1)^j z.sigma)/2 equals |w><w|.
Ket bloch_ket(const BlochVector& zv, int outcome) {
  double x = zv.z[0], y = zv.z[1], z = zv.z[2];
  if (outcome == 1) { x = -x; y = -y; z = -z; }
  if (z > -0.5) {
    const double n = std::sqrt(2.0 * (1.0 + z));
    return {complexd((1.0 + z) / n, 0.0), complexd(x / n, y / n)};
  }
  const double n = std::sqrt(2.0 * (1.0 - z));
  return {complexd(x / n, -y / n), complexd((1.0 - z) / n, 0.0)};
}

// <w| M |w> over one qubit factor: the unnormalized post-measurement operator
// of the remaining factors. Factor 0 is the most significant.
ComplexMatrix contract_qubit(const ComplexMatrix& m, int qubit, const Ket& w) {
  int n = 0;
  while ((1 << n) < m.dim()) ++n;
  if ((1 << n) != m.dim() || qubit < 0 || qubit >= n)
    throw std::invalid_argument("contract_qubit: bad factor index");
  const int low = n - 1 - qubit;
  const int lowmask = (1 << low) - 1;
  auto ins = [&](int idx, int bit) {
    return ((idx & ~lowmask) << 1) | (bit << low) | (idx & lowmask);
  };
  ComplexMatrix out(m.dim() / 2);
  for (int i = 0; i < out.dim(); ++i)
    for (int j = 0; j < out.dim(); ++j) {
      complexd acc = 0.0;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          acc += std::conj(w[a]) * w[b] * m(ins(i, a), ins(j, b));
      out(i, j) = acc;
    }
  return out;
}

// Entropy of m2 / tr(m2) for a 2x2 PSD block with known positive trace.
double entropy2(const ComplexMatrix& m2, double tr) {
  const double a = m2(0, 0).real(), d = m2(1, 1).real();
  const double det = a * d - std::norm(m2(0, 1));
  const double disc = std::sqrt(std::max(tr * tr / 4.0 - det, 0.0));
  const double l0 = std::clamp((tr / 2.0 - disc) / tr, 0.0, 1.0);
  const double l1 = std::clamp((tr / 2.0 + disc) / tr, 0.0, 1.0);
  return -xlog2x(l0) - xlog2x(l1);
}

struct AxisGrid {
  std::vector<std::array<double, 2>> angles;
  std::vector<BlochVector> axes;
  std::vector<std::array<Ket, 2>> kets;
};

AxisGrid make_grid(int nth, int nph) {
  AxisGrid g;
  const double dth = (kPi / 2.0) / (nth - 1);
  const double dph = 2.0 * kPi / nph;
  for (int it = 0; it < nth; ++it)
    for (int ip = 0; ip < nph; ++ip) {
      const BlochVector z = BlochVector::from_angles(it * dth, ip * dph);
      g.angles.push_back({it * dth, ip * dph});
      g.axes.push_back(z);
      g.kets.push_back({bloch_ket(z, 0), bloch_ket(z, 1)});
    }
  return g;
}

struct ABranchM {
  ComplexMatrix op;  // unnormalized BC operator, trace p_j
  double p;
};

std::array<ABranchM, 2> a_branches(const ComplexMatrix& rho, const BlochVector& zA) {
  std::array<ABranchM, 2> out;
  for (int j = 0; j < 2; ++j) {
    out[j].op = contract_qubit(rho, 0, bloch_ket(zA, j));
    out[j].p = out[j].op.trace().real();
  }
  return out;
}

double s_b_of(const std::array<ABranchM, 2>& br) {
  double s = 0.0;
  for (const auto& b : br)
    if (b.p > kDead)
      s += b.p * von_neumann_entropy(complexd(1.0 / b.p) * partial_trace(b.op, {true, false}));
  return s;
}

// per-branch conditional C entropy sum_k p_{k|j} S(rho_c) for one B axis
double inner_c(const ABranchM& br, const std::array<Ket, 2>& kb) {
  if (br.p <= kDead) return 1.0;  // maximally mixed placeholder
  double acc = 0.0;
  for (int k = 0; k < 2; ++k) {
    const ComplexMatrix c2 = contract_qubit(br.op, 0, kb[k]);
    const double pjk = c2.trace().real();
    if (pjk > kDead) acc += (pjk / br.p) * entropy2(c2, pjk);
  }
  return acc;
}

struct SharedEval {
  double std_val;  // S_B|PiA + sum_j p_j inner_j
  double bs_val;   // S_B|PiA + sum_j inner_j
};

SharedEval eval_shared(const ComplexMatrix& rho, const BlochVector& zA, const BlochVector& zB) {
  const auto br = a_branches(rho, zA);
  const double sb = s_b_of(br);
  const std::array<Ket, 2> kb{bloch_ket(zB, 0), bloch_ket(zB, 1)};
  double std_v = sb, bs_v = sb;
  for (int j = 0; j < 2; ++j) {
    const double ic = inner_c(br[j], kb);
    std_v += br[j].p * ic;
    bs_v += ic;
  }
  return {std_v, bs_v};
}

double eval_conditional(const ComplexMatrix& rho, const BlochVector& zA,
                        const BlochVector& zB0, const BlochVector& zB1) {
  const auto br = a_branches(rho, zA);
  double v = s_b_of(br);
  v += br[0].p * inner_c(br[0], {bloch_ket(zB0, 0), bloch_ket(zB0, 1)});
  v += br[1].p * inner_c(br[1], {bloch_ket(zB1, 0), bloch_ket(zB1, 1)});
  return v;
}

// coordinate pattern search minimizing f over `dim` angles
template <typename F>
std::pair<double, std::vector<double>> pattern_min(F&& f, std::vector<double> x,
                                                   std::vector<double> step, double tol,
                                                   int max_iters) {
  double fx = f(x);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool improved = false;
    for (size_t c = 0; c < x.size(); ++c)
      for (double sgn : {1.0, -1.0}) {
        std::vector<double> cand = x;
        cand[c] += sgn * step[c];
        const double fc = f(cand);
        if (fc < fx) {
          fx = fc;
          x = cand;
          improved = true;
        }
      }
    if (!improved) {
      for (double& s : step) s *= 0.5;
      if (*std::max_element(step.begin(), step.end()) < tol) break;
    }
  }
  return {fx, x};
}

void require_valid(const ComplexMatrix& rho, int dim) {
  if (rho.dim() != dim)
    throw std::invalid_argument("state has dimension " + std::to_string(rho.dim()) +
                                ", expected " + std::to_string(dim));
  const ValidationReport rep = validate_state(rho);
  if (!rep.valid)
    throw std::invalid_argument("state is not a valid density matrix (min eigenvalue " +
                                std::to_string(rep.min_eigenvalue) + ")");
}

}  // namespace

OracleResult oracle_discord(const ComplexMatrix& rho, const OracleOptions& opts) {
  require_valid(rho, 8);
  if (opts.grid_theta < 2 || opts.grid_phi < 1)
    throw std::invalid_argument("bad oracle grid");

  OracleResult res;
  res.s_abc = von_neumann_entropy(rho);
  res.s_a = von_neumann_entropy(partial_trace(rho, {true, false, false}));
  const double baseline = res.s_abc - res.s_a;

  const AxisGrid grid = make_grid(opts.grid_theta, opts.grid_phi);
  const size_t n = grid.axes.size();

  double best_std = 1e300, best_bs = 1e300, best_cond = 1e300;
  std::array<double, 4> arg_std{}, arg_bs{};
  std::array<double, 6> arg_cond{};

  std::vector<double> inner0(n), inner1(n);
  for (size_t ia = 0; ia < n; ++ia) {
    const auto br = a_branches(rho, grid.axes[ia]);
    const double sb = s_b_of(br);
    for (size_t ib = 0; ib < n; ++ib) {
      inner0[ib] = inner_c(br[0], grid.kets[ib]);
      inner1[ib] = inner_c(br[1], grid.kets[ib]);
      const double std_v = sb + br[0].p * inner0[ib] + br[1].p * inner1[ib];
      const double bs_v = sb + inner0[ib] + inner1[ib];
      if (std_v < best_std) {
        best_std = std_v;
        arg_std = {grid.angles[ia][0], grid.angles[ia][1], grid.angles[ib][0],
                   grid.angles[ib][1]};
      }
      if (bs_v < best_bs) {
        best_bs = bs_v;
        arg_bs = {grid.angles[ia][0], grid.angles[ia][1], grid.angles[ib][0],
                  grid.angles[ib][1]};
      }
    }
    if (opts.conditional_b) {
      const size_t i0 = std::min_element(inner0.begin(), inner0.end()) - inner0.begin();
      const size_t i1 = std::min_element(inner1.begin(), inner1.end()) - inner1.begin();
      const double cond_v = sb + br[0].p * inner0[i0] + br[1].p * inner1[i1];
      if (cond_v < best_cond) {
        best_cond = cond_v;
        arg_cond = {grid.angles[ia][0], grid.angles[ia][1], grid.angles[i0][0],
                    grid.angles[i0][1], grid.angles[i1][0], grid.angles[i1][1]};
      }
    }
  }

  const double dth = (kPi / 2.0) / (opts.grid_theta - 1);
  const double dph = 2.0 * kPi / opts.grid_phi;

  auto shared_scheme = [](const std::vector<double>& x) {
    return MeasurementScheme::shared(BlochVector::from_angles(x[0], x[1]),
                                     BlochVector::from_angles(x[2], x[3]));
  };

  std::vector<double> x_std(arg_std.begin(), arg_std.end());
  std::vector<double> x_bs(arg_bs.begin(), arg_bs.end());
  if (opts.refine) {
    auto f_std = [&](const std::vector<double>& x) {
      return eval_shared(rho, BlochVector::from_angles(x[0], x[1]),
                         BlochVector::from_angles(x[2], x[3]))
          .std_val;
    };
    auto f_bs = [&](const std::vector<double>& x) {
      return eval_shared(rho, BlochVector::from_angles(x[0], x[1]),
                         BlochVector::from_angles(x[2], x[3]))
          .bs_val;
    };
    std::tie(best_std, x_std) = pattern_min(f_std, x_std, {dth, dph, dth, dph}, 1e-10, 400);
    std::tie(best_bs, x_bs) = pattern_min(f_bs, x_bs, {dth, dph, dth, dph}, 1e-10, 400);
  }
  res.scheme = shared_scheme(x_std);
  res.scheme_branch_sum = shared_scheme(x_bs);
  res.q = best_std - baseline;
  res.q_branch_sum = best_bs - baseline;

  if (opts.conditional_b) {
    std::vector<double> x_cond(arg_cond.begin(), arg_cond.end());
    if (opts.refine) {
      auto f_cond = [&](const std::vector<double>& x) {
        return eval_conditional(rho, BlochVector::from_angles(x[0], x[1]),
                                BlochVector::from_angles(x[2], x[3]),
                                BlochVector::from_angles(x[4], x[5]));
      };
      auto [v1, y1] =
          pattern_min(f_cond, x_cond, {dth, dph, dth, dph, dth, dph}, 1e-10, 400);
      // the refined shared solution is a feasible conditional scheme; use it
      // as a second start so the conditional result never trails the shared one
      std::vector<double> from_shared{x_std[0], x_std[1], x_std[2],
                                      x_std[3], x_std[2], x_std[3]};
      auto [v2, y2] =
          pattern_min(f_cond, from_shared, {dth, dph, dth, dph, dth, dph}, 1e-10, 400);
      if (v2 < v1) std::tie(v1, y1) = std::tie(v2, y2);
      best_cond = v1;
      x_cond = y1;
    }
    res.scheme = MeasurementScheme::conditional(BlochVector::from_angles(x_cond[0], x_cond[1]),
                                                BlochVector::from_angles(x_cond[2], x_cond[3]),
                                                BlochVector::from_angles(x_cond[4], x_cond[5]));
    res.q = best_cond - baseline;
  }
  return res;
}

double bipartite_discord(const ComplexMatrix& rho4, const OracleOptions& opts) {
  require_valid(rho4, 4);
  const double s_bc = von_neumann_entropy(rho4);
  const double s_b = von_neumann_entropy(partial_trace(rho4, {true, false}));
  const double baseline = s_bc - s_b;

  auto cond_c = [&](const BlochVector& zB) {
    double acc = 0.0;
    for (int j = 0; j < 2; ++j) {
      const ComplexMatrix c2 = contract_qubit(rho4, 0, bloch_ket(zB, j));
      const double pj = c2.trace().real();
      if (pj > kDead) acc += pj * entropy2(c2, pj);
    }
    return acc;
  };

  const double dth = (kPi / 2.0) / (opts.grid_theta - 1);
  const double dph = 2.0 * kPi / opts.grid_phi;
  double best = 1e300;
  std::vector<double> arg{0.0, 0.0};
  for (int it = 0; it < opts.grid_theta; ++it)
    for (int ip = 0; ip < opts.grid_phi; ++ip) {
      const double v = cond_c(BlochVector::from_angles(it * dth, ip * dph));
      if (v < best) {
        best = v;
        arg = {it * dth, ip * dph};
      }
    }
  if (opts.refine) {
    auto f = [&](const std::vector<double>& x) {
      return cond_c(BlochVector::from_angles(x[0], x[1]));
    };
    std::tie(best, arg) = pattern_min(f, arg, {dth, dph}, 1e-10, 400);
  }
  return best - baseline;
}

}  // namespace triqd
