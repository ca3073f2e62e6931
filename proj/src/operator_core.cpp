#include "gibbsmi/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "gibbsmi/errors.hpp"

namespace gibbsmi {

namespace {

using Eigen::Index;

// Residual bounds promised by eigh.
constexpr double kReconstructionTol = 1e-10;
constexpr double kOrthonormalTol = 1e-10;
// Eigenvalues closer than this (relative to max(1, ||H||_F)) share a cluster.
constexpr double kDegeneracyTol = 1e-12;
// Any threshold below 1/sqrt(dim) is guaranteed to fill every cluster.
constexpr double kGramSchmidtAccept = 1e-3;
constexpr double kPhaseEntryTol = 1e-10;

Index idx(std::size_t i) { return static_cast<Index>(i); }

void orthogonalize_against(Eigen::VectorXcd& v, const std::vector<Eigen::VectorXcd>& basis) {
  // Two passes of classical Gram-Schmidt.
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& u : basis) {
      v -= u * u.dot(v);
    }
  }
}

void fix_phase(Eigen::VectorXcd& v) {
  for (Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > kPhaseEntryTol) {
      v *= std::conj(v(i)) / mag;
      v(i) = v(i).real();
      return;
    }
  }
}

// Replaces the columns [begin, end) of `vecs` by the canonical basis of their span.
void canonicalize_cluster(DenseMatrix& vecs, Index begin, Index end) {
  const Index k = end - begin;
  const Index n = vecs.rows();
  const DenseMatrix cluster = vecs.middleCols(begin, k);

  std::vector<Eigen::VectorXcd> chosen;
  for (Index j = 0; j < n && static_cast<Index>(chosen.size()) < k; ++j) {
    // P e_j with P = C C^+.
    Eigen::VectorXcd v = cluster * cluster.row(j).adjoint();
    orthogonalize_against(v, chosen);
    const double norm = v.norm();
    if (norm > kGramSchmidtAccept) {
      chosen.push_back(v / norm);
    }
  }
  if (static_cast<Index>(chosen.size()) != k) {
    throw ConvergenceError("eigh: failed to build canonical basis for degenerate cluster");
  }
  for (Index c = 0; c < k; ++c) {
    vecs.col(begin + c) = chosen[static_cast<std::size_t>(c)];
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(DenseMatrix m) : m_(std::move(m)) {
  if (m_.rows() == 0 || m_.rows() != m_.cols()) {
    std::ostringstream msg;
    msg << "ComplexMatrix must be square and non-empty, got " << m_.rows() << "x" << m_.cols();
    throw ArgumentError(msg.str());
  }
  for (Index i = 0; i < m_.size(); ++i) {
    const Complex z = m_.data()[i];
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw ArgumentError("ComplexMatrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  return ComplexMatrix(DenseMatrix::Identity(idx(dim), idx(dim)));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
  return ComplexMatrix(DenseMatrix::Zero(idx(dim), idx(dim)));
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& entries) {
  DenseMatrix m = DenseMatrix::Zero(idx(entries.size()), idx(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) {
    m(idx(i), idx(i)) = entries[i];
  }
  return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::projector(const Eigen::VectorXcd& v) {
  const Eigen::VectorXcd u = v.normalized();
  return ComplexMatrix(u * u.adjoint());
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double tol) const {
  return dim() == other.dim() && (m_ - other.m_).norm() <= tol;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("matrix sum: dimension mismatch");
  return ComplexMatrix(a.m_ + b.m_);
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("matrix difference: dimension mismatch");
  return ComplexMatrix(a.m_ - b.m_);
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw ArgumentError("matrix product: dimension mismatch");
  return ComplexMatrix(a.m_ * b.m_);
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) { return ComplexMatrix(s * a.m_); }

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  const DenseMatrix& d = m_.dense();
  const double skew = (d - d.adjoint()).norm();
  if (skew > kHermTol * std::max(1.0, d.norm())) {
    std::ostringstream msg;
    msg << "operator is not Hermitian: ||M - M^+||_F = " << skew;
    throw ArgumentError(msg.str());
  }
}

ComplexMatrix SpectralDecomposition::reconstruct(const std::vector<double>& values) const {
  const DenseMatrix& v = eigenvectors.dense();
  Eigen::VectorXd diag(static_cast<Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) diag(idx(i)) = values[i];
  return ComplexMatrix(v * diag.asDiagonal() * v.adjoint());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Index na = idx(a.dim());
  const Index nb = idx(b.dim());
  const DenseMatrix& da = a.dense();
  const DenseMatrix& db = b.dense();
  DenseMatrix out(na * nb, na * nb);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = da(i, j) * db;
    }
  }
  return ComplexMatrix(std::move(out));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, DimPair dims, Subsystem keep) {
  if (dims.d_a == 0 || dims.d_b == 0 || m.dim() != dims.total()) {
    std::ostringstream msg;
    msg << "partial_trace: matrix dimension " << m.dim() << " does not factor as " << dims.d_a
        << "x" << dims.d_b;
    throw ArgumentError(msg.str());
  }
  const Index da = idx(dims.d_a);
  const Index db = idx(dims.d_b);
  const DenseMatrix& d = m.dense();
  if (keep == Subsystem::A) {
    DenseMatrix out = DenseMatrix::Zero(da, da);
    for (Index i = 0; i < da; ++i)
      for (Index j = 0; j < da; ++j)
        for (Index k = 0; k < db; ++k) out(i, j) += d(i * db + k, j * db + k);
    return ComplexMatrix(std::move(out));
  }
  DenseMatrix out = DenseMatrix::Zero(db, db);
  for (Index k = 0; k < db; ++k)
    for (Index l = 0; l < db; ++l)
      for (Index i = 0; i < da; ++i) out(k, l) += d(i * db + k, i * db + l);
  return ComplexMatrix(std::move(out));
}

SpectralDecomposition eigh(const HermitianOperator& h) {
  const DenseMatrix& m = h.dense();
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(m);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigh: solver did not converge (dim " << m.rows() << ", ||H||_F = " << m.norm() << ")";
    throw ConvergenceError(msg.str());
  }

  // Eigen already sorts ascending.
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  DenseMatrix vecs = solver.eigenvectors();
  const Index n = lambda.size();
  const double scale = std::max(1.0, m.norm());

  for (Index begin = 0; begin < n;) {
    Index end = begin + 1;
    while (end < n && lambda(end) - lambda(end - 1) <= kDegeneracyTol * scale) ++end;
    if (end - begin > 1) canonicalize_cluster(vecs, begin, end);
    begin = end;
  }
  for (Index c = 0; c < n; ++c) {
    Eigen::VectorXcd col = vecs.col(c);
    fix_phase(col);
    vecs.col(c) = col;
  }

  const double recon = (m - vecs * lambda.asDiagonal() * vecs.adjoint()).norm();
  const double ortho = (vecs.adjoint() * vecs - DenseMatrix::Identity(n, n)).norm();
  if (recon > kReconstructionTol * scale || ortho > kOrthonormalTol) {
    std::ostringstream msg;
    msg << "eigh: residual too large (reconstruction " << recon << ", orthonormality " << ortho
        << ")";
    throw ConvergenceError(msg.str());
  }

  std::vector<double> values(lambda.data(), lambda.data() + n);
  return SpectralDecomposition{std::move(values), ComplexMatrix(std::move(vecs))};
}

HermitianOperator spectral_apply(const SpectralDecomposition& spec, const RealFunction& f) {
  std::vector<double> mapped;
  mapped.reserve(spec.eigenvalues.size());
  for (double lambda : spec.eigenvalues) {
    const double value = f(lambda);
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "spectral_apply: function is not finite at eigenvalue " << lambda;
      throw DomainError(msg.str());
    }
    mapped.push_back(value);
  }
  return HermitianOperator(spec.reconstruct(mapped));
}

HermitianOperator spectral_apply(const HermitianOperator& h, const RealFunction& f) {
  return spectral_apply(eigh(h), f);
}

ComplexMatrix oracle_expm_taylor(const HermitianOperator& h, double s) {
  const Index n = idx(h.dim());
  DenseMatrix a = s * h.dense();

  int squarings = 0;
  const double norm = a.norm();
  if (norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
    a /= std::ldexp(1.0, squarings);
  }

  DenseMatrix sum = DenseMatrix::Identity(n, n);
  DenseMatrix term = DenseMatrix::Identity(n, n);
  for (int k = 1; k < 200; ++k) {
    term = (term * a) / static_cast<double>(k);
    sum += term;
    if (term.norm() < 1e-16 * sum.norm()) break;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return ComplexMatrix(std::move(sum));
}

}  // namespace gibbsmi
