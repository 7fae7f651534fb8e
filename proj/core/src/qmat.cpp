#include "triqd/qmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace triqd {

namespace {

void check_dim(int dim) {
  if (dim < 1 || dim > ComplexMatrix::kMaxDim)
    throw std::invalid_argument("matrix dimension must be in [1, 8], got " +
                                std::to_string(dim));
}

}  // namespace

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) { check_dim(dim); }

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in matrix sum");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] += o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in matrix difference");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] -= o.a_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(complexd s) {
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("dimension mismatch in matrix product");
  const int n = a.dim_;
  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const complexd aik = a(i, k);
      if (aik == complexd{}) continue;
      for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix ComplexMatrix::dagger() const {
  ComplexMatrix out(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) out(i, j) = std::conj((*this)(j, i));
  return out;
}

complexd ComplexMatrix::trace() const {
  complexd t = 0.0;
  for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("dimension mismatch in matrix comparison");
  double worst = 0.0;
  for (int i = 0; i < dim_ * dim_; ++i) worst = std::max(worst, std::abs(a_[i] - o.a_[i]));
  return worst;
}

ComplexMatrix pauli(int k) {
  ComplexMatrix m(2);
  switch (k) {
    case 1: m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 2: m(0, 1) = complexd(0, -1); m(1, 0) = complexd(0, 1); break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    default: throw std::invalid_argument("pauli index must be 1, 2 or 3");
  }
  return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  if (na * nb > ComplexMatrix::kMaxDim)
    throw std::invalid_argument("kron result exceeds the supported dimension 8");
  ComplexMatrix out(na * nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) {
      const complexd aij = a(i, j);
      if (aij == complexd{}) continue;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

namespace {

void require_hermitian(const ComplexMatrix& m) {
  const int n = m.dim();
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double d = std::abs(m(i, j) - std::conj(m(j, i)));
      if (d > worst) { worst = d; wi = i; wj = j; }
    }
  if (worst > 1e-12)
    throw std::invalid_argument("matrix is not Hermitian: |m(" + std::to_string(wi) +
                                "," + std::to_string(wj) + ") - conj(m(" +
                                std::to_string(wj) + "," + std::to_string(wi) +
                                "))| = " + std::to_string(worst));
}

double off_diag_frobenius(const ComplexMatrix& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

}  // namespace

EigDecomposition eig_hermitian_full(const ComplexMatrix& m) {
  require_hermitian(m);
  const int n = m.dim();
  ComplexMatrix a = m;
  ComplexMatrix v = ComplexMatrix::identity(n);

  // Cyclic sweeps of complex Jacobi rotations; each rotation zeroes one
  // off-diagonal pair. Quadratic convergence makes ~10 sweeps plenty at n <= 8.
  constexpr double kConverged = 1e-13;
  constexpr int kMaxSweeps = 60;
  for (int sweep = 0; sweep < kMaxSweeps && off_diag_frobenius(a) >= kConverged; ++sweep) {
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        const complexd phase = a(p, q) / r;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const complexd sp = s * phase;           // G(p,q) entry
        const complexd sm = s * std::conj(phase);

        // A <- G' A G with G = I except G(pp)=G(qq)=c, G(pq)=sp, G(qp)=-sm
        for (int i = 0; i < n; ++i) {
          const complexd aip = a(i, p), aiq = a(i, q);
          a(i, p) = aip * c - aiq * sm;
          a(i, q) = aip * sp + aiq * c;
        }
        for (int j = 0; j < n; ++j) {
          const complexd apj = a(p, j), aqj = a(q, j);
          a(p, j) = c * apj - std::conj(sm) * aqj;
          a(q, j) = std::conj(sp) * apj + c * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          const complexd vip = v(i, p), viq = v(i, q);
          v(i, p) = vip * c - viq * sm;
          v(i, q) = vip * sp + viq * c;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigDecomposition out;
  out.spectrum.values.resize(n);
  out.vectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    out.spectrum.values[k] = a(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

Spectrum eig_hermitian(const ComplexMatrix& m) {
  return eig_hermitian_full(m).spectrum;
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<bool>& keep) {
  const int n = static_cast<int>(keep.size());
  if (n < 1 || (1 << n) != rho.dim())
    throw std::invalid_argument("partial_trace mask length does not match the matrix: dim " +
                                std::to_string(rho.dim()) + " needs log2(dim) flags");
  std::vector<int> kept, traced;
  for (int k = 0; k < n; ++k) (keep[k] ? kept : traced).push_back(k);
  const int nk = static_cast<int>(kept.size());
  const int nt = static_cast<int>(traced.size());

  // factor k carries bit weight 1 << (n-1-k)
  auto compose = [&](int kb, int tb) {
    int idx = 0;
    for (int x = 0; x < nk; ++x)
      if ((kb >> (nk - 1 - x)) & 1) idx |= 1 << (n - 1 - kept[x]);
    for (int x = 0; x < nt; ++x)
      if ((tb >> (nt - 1 - x)) & 1) idx |= 1 << (n - 1 - traced[x]);
    return idx;
  };

  ComplexMatrix out(1 << nk);
  for (int i = 0; i < (1 << nk); ++i)
    for (int j = 0; j < (1 << nk); ++j) {
      complexd acc = 0.0;
      for (int t = 0; t < (1 << nt); ++t) acc += rho(compose(i, t), compose(j, t));
      out(i, j) = acc;
    }
  return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double von_neumann_entropy(const ComplexMatrix& rho) {
  const Spectrum spec = eig_hermitian(rho);
  double s = 0.0;
  for (double lam : spec.values) {
    if (lam < -1e-10)
      throw std::invalid_argument("state has negative eigenvalue " + std::to_string(lam));
    s -= xlog2x(std::max(lam, 0.0));
  }
  return s;
}

}  // namespace triqd
