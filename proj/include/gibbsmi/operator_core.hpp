#pragma once

// Dense complex operator algebra for small bipartite systems.
//
// Every operator is a dense square complex matrix. Dimensions are tiny
// (at most a few dozen), so everything is value-typed and recomputed
// on demand rather than cached.

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include <Eigen/Dense>

namespace gibbsmi {

using Complex = std::complex<double>;
using DenseMatrix = Eigen::MatrixXcd;

/// Relative Hermiticity tolerance: ||M - M^+||_F <= kHermTol * max(1, ||M||_F).
inline constexpr double kHermTol = 1e-12;

/// Square complex matrix with finite entries.
class ComplexMatrix {
 public:
  /// Throws ArgumentError if `m` is empty, not square, or has non-finite entries.
  explicit ComplexMatrix(DenseMatrix m);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix zero(std::size_t dim);
  static ComplexMatrix diagonal(const std::vector<double>& entries);
  /// Projector |v><v| onto a (not necessarily normalized) vector.
  static ComplexMatrix projector(const Eigen::VectorXcd& v);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t row, std::size_t col) const {
    return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
  const DenseMatrix& dense() const { return m_; }

  Complex trace() const { return m_.trace(); }
  double frobenius_norm() const { return m_.norm(); }
  ComplexMatrix adjoint() const { return ComplexMatrix(m_.adjoint()); }

  /// Frobenius-norm comparison; there is no exact operator==.
  bool approx_equal(const ComplexMatrix& other, double tol) const;

  friend ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

 private:
  DenseMatrix m_;
};

/// ComplexMatrix that passed the Hermiticity check at construction.
class HermitianOperator {
 public:
  /// Throws ArgumentError when the kHermTol bound fails. Never symmetrizes.
  explicit HermitianOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  std::size_t dim() const { return m_.dim(); }
  const DenseMatrix& dense() const { return m_.dense(); }

 private:
  ComplexMatrix m_;
};

/// Subsystem dimensions of a bipartite Hilbert space H_A (x) H_B.
struct DimPair {
  std::size_t d_a = 0;
  std::size_t d_b = 0;

  std::size_t total() const { return d_a * d_b; }
  friend bool operator==(const DimPair&, const DimPair&) = default;
};

enum class Subsystem { A, B };

/// Eigenpairs of a Hermitian operator, eigenvalues ascending.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // columns are orthonormal eigenvectors

  double min_eigenvalue() const { return eigenvalues.front(); }
  /// V diag(values) V^+.
  ComplexMatrix reconstruct(const std::vector<double>& values) const;
};

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Traces out the subsystem not named by `keep`. Throws ArgumentError on
/// dimension mismatch.
ComplexMatrix partial_trace(const ComplexMatrix& m, DimPair dims, Subsystem keep);

/// Hermitian eigendecomposition with a canonical basis.
///
/// Eigenvalues come out ascending. Inside each degenerate cluster the basis
/// is rebuilt by Gram-Schmidt on the projected unit vectors e_0, e_1, ...,
/// so the output depends only on the input matrix, not on solver internals.
/// Each eigenvector is then phase-fixed so its first non-negligible entry is
/// real and positive. Throws ConvergenceError (with the residual norm) if the
/// solver fails or the reconstruction bound is violated.
SpectralDecomposition eigh(const HermitianOperator& h);

using RealFunction = std::function<double(double)>;

/// V diag(f(lambda)) V^+. Throws DomainError if f is non-finite on any eigenvalue.
HermitianOperator spectral_apply(const HermitianOperator& h, const RealFunction& f);
HermitianOperator spectral_apply(const SpectralDecomposition& spec, const RealFunction& f);

/// exp(s H) by scaling-and-squaring of the Taylor series. Independent of eigh;
/// used as a cross-check on spectral_apply.
ComplexMatrix oracle_expm_taylor(const HermitianOperator& h, double s);

}  // namespace gibbsmi
