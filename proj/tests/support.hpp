#pragma once

// Shared test helpers: seeded generators for matrices, states and the
// premise-constrained parameter families.

#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include "triqd/discord.hpp"
#include "triqd/measure.hpp"
#include "triqd/qmat.hpp"
#include "triqd/states.hpp"

namespace triqd::test {

using Rng = std::mt19937_64;

inline double urand(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline ComplexMatrix random_hermitian(Rng& rng, int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    m(i, i) = urand(rng, -1, 1);
    for (int j = i + 1; j < dim; ++j) {
      m(i, j) = complexd(urand(rng, -1, 1), urand(rng, -1, 1));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

// Ginibre construction: M M^dag normalized to unit trace.
inline ComplexMatrix random_density(Rng& rng, int dim) {
  ComplexMatrix g(dim);
  std::normal_distribution<double> nd(0.0, 1.0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = complexd(nd(rng), nd(rng));
  ComplexMatrix rho = g * g.dagger();
  rho *= complexd(1.0 / rho.trace().real());
  return rho;
}

inline ComplexMatrix random_unitary(Rng& rng, int dim) {
  return eig_hermitian_full(random_hermitian(rng, dim)).vectors;
}

inline BlochVector random_bloch(Rng& rng) {
  std::normal_distribution<double> nd(0.0, 1.0);
  while (true) {
    const double x = nd(rng), y = nd(rng), z = nd(rng);
    if (x * x + y * y + z * z > 1e-12) return BlochVector::from_components(x, y, z);
  }
}

inline bool is_valid_state(const ParamSet& p) {
  return validate_state(build_state(p)).min_eigenvalue >= 1e-9;
}

inline std::array<double, 3> rand3(Rng& rng, double scale) {
  return {scale * urand(rng, -1, 1), scale * urand(rng, -1, 1), scale * urand(rng, -1, 1)};
}

inline ParamSet random_paramset_31(Rng& rng, double scale = 0.25) {
  while (true) {
    ParamSet p;
    p.a = {0, 0, scale * urand(rng, -1, 1)};
    p.b = {0, 0, scale * urand(rng, -1, 1)};
    p.c = rand3(rng, scale);
    p.r = rand3(rng, scale);
    p.s = rand3(rng, scale);
    p.t = rand3(rng, scale);
    if (is_valid_state(p)) return p;
  }
}

inline ParamSet random_paramset_327(Rng& rng, double scale = 0.2) {
  while (true) {
    ParamSet p;
    p.a = rand3(rng, scale);
    p.b = rand3(rng, scale);
    p.c = rand3(rng, scale);
    p.r = rand3(rng, scale);
    p.s = rand3(rng, scale);
    p.v = rand3(rng, scale);
    p.t = rand3(rng, scale);
    if (is_valid_state(p)) return p;
  }
}

// ---- premise-constrained samplers, one per closed-form case ----

inline ParamSet sample_t2_1(Rng& rng) {
  while (true) {
    ParamSet p;
    p.a = {0, 0, urand(rng, -0.6, 0.6)};
    p.b = {0, 0, urand(rng, -0.6, 0.6)};
    p.c = rand3(rng, 0.3);
    p.r = rand3(rng, 0.4);
    p.s = rand3(rng, 0.3);
    p.t = rand3(rng, 0.3);
    const double a3 = p.a[2], b3 = p.b[2];
    if (a3 * b3 * p.r[2] > 0) continue;
    if (p.r[2] * p.r[2] - std::max(p.r[0] * p.r[0], p.r[1] * p.r[1]) < a3 * b3 * p.r[2])
      continue;
    if ((b3 + p.r[2]) * (p.c[2] + p.s[2]) > 0) continue;
    if (is_valid_state(p)) return p;
  }
}

inline ParamSet sample_t2_2(Rng& rng, int axis) {
  while (true) {
    ParamSet p;
    p.a = {0, 0, urand(rng, -0.5, 0.5)};
    p.r = rand3(rng, 0.4);
    bool axis_max = std::abs(p.r[axis]) > 0.02;
    for (int k = 0; k < 3; ++k) axis_max = axis_max && std::abs(p.r[axis]) >= std::abs(p.r[k]);
    if (!axis_max) continue;
    p.c = rand3(rng, 0.3);
    p.s = rand3(rng, 0.3);
    if (p.c[axis] * p.s[axis] > 0) continue;
    if (p.s[axis] > std::abs(p.c[axis])) continue;
    p.t = rand3(rng, 0.3);
    if (is_valid_state(p)) return p;
  }
}

inline ParamSet sample_t3(Rng& rng, int case_no) {
  while (true) {
    ParamSet p;
    const std::array<double, 3> a = rand3(rng, 0.4), b = rand3(rng, 0.4);
    const std::array<double, 3> c = rand3(rng, 0.3), s = rand3(rng, 0.3);
    const double r = urand(rng, -0.35, 0.35), v = urand(rng, -0.35, 0.35);
    switch (case_no) {
      case 1: p.b = b; p.c = c; p.s = s; p.r = {r, r, r}; break;
      case 2: p.a = a; p.c = c; p.s = s; p.r = {r, r, r}; break;
      case 3: p.a = a; p.b = b; p.c = c; p.s = s; break;
      case 4: p.b = b; p.r = {r, r, r}; p.v = {v, v, v}; break;
      case 5: p.a = a; p.b = b; p.v = {v, v, v}; break;
      case 6: p.a = a; p.r = {r, r, r}; p.v = {v, v, v}; break;
      default: throw std::invalid_argument("case_no must be 1..6");
    }
    auto norm3 = [](const std::array<double, 3>& x) {
      return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
    };
    if (norm3(p.a) > 0.95 || norm3(p.b) > 0.95) continue;
    const bool needs_a = case_no == 2 || case_no == 3 || case_no == 5 || case_no == 6;
    const bool needs_b = case_no == 1 || case_no == 4;
    if (needs_a && norm3(p.a) < 0.05) continue;
    if (needs_b && norm3(p.b) < 0.05) continue;
    if ((case_no == 1 || case_no == 2 || case_no == 4 || case_no == 6) && std::abs(r) < 0.02)
      continue;
    if ((case_no == 4 || case_no == 5 || case_no == 6) && std::abs(v) < 0.02) continue;
    if (is_valid_state(p)) return p;
  }
}

inline ParamSet example1() {
  ParamSet p;
  p.a = {0, 0, 0.03};
  p.b = {0, 0, 0.25};
  p.c = {0.12, 0.12, 0.01};
  p.r = {0.1, 0.1, -0.3};
  p.s = {0.13, 0.13, -0.26};
  p.t = {-0.02, -0.02, -0.36};
  return p;
}

inline ParamSet example2() {
  ParamSet p;
  p.b = {0.2, 0.05, 0.1};
  p.c = {0.04, 0.06, 0.11};
  p.r = {0.17, 0.17, 0.17};
  p.s = {0.08, 0.15, 0.25};
  return p;
}

}  // namespace triqd::test
