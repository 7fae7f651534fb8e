#pragma once

#include <array>
#include <complex>
#include <vector>

namespace triqd {

using complexd = std::complex<double>;

/// Dense complex matrix of dimension 1..8. Fixed-capacity value type; all
/// operations used by the discord machinery (products, adjoints, Kronecker
/// products, partial traces) stay allocation-free.
class ComplexMatrix {
 public:
  static constexpr int kMaxDim = 8;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim);
  static ComplexMatrix identity(int dim);

  int dim() const { return dim_; }
  complexd& operator()(int i, int j) { return a_[i * dim_ + j]; }
  const complexd& operator()(int i, int j) const { return a_[i * dim_ + j]; }

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(complexd s);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(complexd s, ComplexMatrix m) { return m *= s; }
  friend ComplexMatrix operator*(ComplexMatrix m, complexd s) { return m *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  ComplexMatrix dagger() const;
  complexd trace() const;

  /// max_ij |m_ij - conj(m_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }
  double max_abs_diff(const ComplexMatrix& o) const;

 private:
  int dim_ = 0;
  std::array<complexd, kMaxDim * kMaxDim> a_{};
};

/// Pauli matrix sigma_k, k in {1,2,3}.
ComplexMatrix pauli(int k);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Real eigenvalues in ascending order.
struct Spectrum {
  std::vector<double> values;
};

struct EigDecomposition {
  Spectrum spectrum;
  ComplexMatrix vectors;  // columns are eigenvectors, ordered as the spectrum
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix. Throws
/// std::invalid_argument naming the worst entry if the input is not
/// Hermitian within 1e-12.
Spectrum eig_hermitian(const ComplexMatrix& m);
EigDecomposition eig_hermitian_full(const ComplexMatrix& m);

/// Trace out the qubit factors whose mask entry is false. rho must be a
/// 2^n x 2^n matrix with n == keep.size(); factor 0 is the most significant.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<bool>& keep);

/// S(rho) = -sum lambda log2 lambda, in bits. Eigenvalues in [-1e-10, 0) are
/// clamped to zero; anything below is rejected as unphysical.
double von_neumann_entropy(const ComplexMatrix& rho);

/// 0 log2 0 := 0 convention used throughout.
double xlog2x(double x);

}  // namespace triqd
