#include "gibbsmi/models.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "gibbsmi/errors.hpp"

namespace gibbsmi {

namespace {

constexpr double kGroundGapTol = 1e-12;
constexpr double kAmplitudeTol = 1e-12;

// std::normal_distribution is implementation-defined; Box-Muller over the raw
// mt19937_64 stream is not, so seeds replay identically across toolchains.
class ComplexGaussian {
 public:
  explicit ComplexGaussian(std::uint64_t seed) : engine_(seed) {}

  // E|z|^2 = 1, real and imaginary parts independent N(0, 1/2).
  Complex operator()() {
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double radius = std::sqrt(-std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
};

HermitianOperator random_hermitian(std::size_t dim, double scale, ComplexGaussian& gauss) {
  const auto n = static_cast<Eigen::Index>(dim);
  DenseMatrix g(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) g(i, j) = gauss();
  DenseMatrix h = (g + g.adjoint()) * 0.5;
  return HermitianOperator(ComplexMatrix(scale * h));
}

}  // namespace

BipartiteHamiltonian::BipartiteHamiltonian(HermitianOperator h_a, HermitianOperator h_b,
                                           HermitianOperator h_int)
    : h_a_(std::move(h_a)), h_b_(std::move(h_b)), h_int_(std::move(h_int)) {
  if (h_int_.dim() != h_a_.dim() * h_b_.dim()) {
    std::ostringstream msg;
    msg << "BipartiteHamiltonian: interaction has dimension " << h_int_.dim() << ", expected "
        << h_a_.dim() << "*" << h_b_.dim();
    throw ArgumentError(msg.str());
  }
}

HermitianOperator assemble_bipartite(const BipartiteHamiltonian& bh) {
  const DimPair dims = bh.dims();
  const ComplexMatrix local = kron(bh.h_a().matrix(), ComplexMatrix::identity(dims.d_b)) +
                              kron(ComplexMatrix::identity(dims.d_a), bh.h_b().matrix());
  return HermitianOperator(local + bh.h_int().matrix());
}

namespace pauli {

ComplexMatrix x() {
  DenseMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return ComplexMatrix(std::move(m));
}

ComplexMatrix y() {
  const Complex i{0.0, 1.0};
  DenseMatrix m(2, 2);
  m << 0.0, -i, i, 0.0;
  return ComplexMatrix(std::move(m));
}

ComplexMatrix z() { return ComplexMatrix::diagonal({1.0, -1.0}); }

}  // namespace pauli

BipartiteHamiltonian xy_hamiltonian(const XYParams& p) {
  if (!std::isfinite(p.b1) || !std::isfinite(p.b2) || !std::isfinite(p.g)) {
    throw ArgumentError("xy_hamiltonian: parameters must be finite");
  }
  const ComplexMatrix coupling = kron(pauli::x(), pauli::x()) + kron(pauli::y(), pauli::y());
  return BipartiteHamiltonian(HermitianOperator(Complex(p.b1) * pauli::z()),
                              HermitianOperator(Complex(p.b2) * pauli::z()),
                              HermitianOperator(Complex(p.g) * coupling));
}

const char* to_string(GroundStateClass c) {
  switch (c) {
    case GroundStateClass::Entangled:
      return "entangled";
    case GroundStateClass::Separable:
      return "separable";
    case GroundStateClass::Boundary:
      return "boundary";
  }
  return "unknown";
}

GroundStateInfo xy_ground_state(const XYParams& p) {
  const HermitianOperator h = assemble_bipartite(xy_hamiltonian(p));
  const SpectralDecomposition spec = eigh(h);

  GroundStateInfo info;
  info.energy = spec.eigenvalues[0];
  info.state_vector = spec.eigenvectors.dense().col(0);

  const double product = p.b1 * p.b2;
  const double g2 = p.g * p.g;
  const bool degenerate = spec.eigenvalues[1] - spec.eigenvalues[0] <= kGroundGapTol;
  if (degenerate) {
    info.classification = GroundStateClass::Boundary;
  } else if (product < g2 - kClassificationBand) {
    info.classification = GroundStateClass::Entangled;
  } else if (product > g2 + kClassificationBand) {
    info.classification = GroundStateClass::Separable;
  } else {
    info.classification = GroundStateClass::Boundary;
  }

  const double du = std::abs(info.state_vector(2));
  info.normalization = du > kAmplitudeTol ? 1.0 / du : 1.0;
  return info;
}

BipartiteHamiltonian random_bipartite(std::size_t d_a, std::size_t d_b, double interaction_scale,
                                      std::uint64_t seed) {
  if (d_a < 2 || d_b < 2) throw ArgumentError("random_bipartite: dimensions must be >= 2");
  if (!std::isfinite(interaction_scale) || interaction_scale < 0.0) {
    throw ArgumentError("random_bipartite: interaction_scale must be finite and non-negative");
  }
  ComplexGaussian gauss(seed);
  HermitianOperator h_a = random_hermitian(d_a, 1.0, gauss);
  HermitianOperator h_b = random_hermitian(d_b, 1.0, gauss);
  HermitianOperator h_int = random_hermitian(d_a * d_b, interaction_scale, gauss);
  return BipartiteHamiltonian(std::move(h_a), std::move(h_b), std::move(h_int));
}

}  // namespace gibbsmi
