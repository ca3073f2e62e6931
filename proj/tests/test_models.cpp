#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gibbsmi/errors.hpp"
#include "gibbsmi/models.hpp"
#include "test_support.hpp"

using namespace gibbsmi;

namespace {

std::vector<double> spectrum(const XYParams& p) {
  return eigh(assemble_bipartite(xy_hamiltonian(p))).eigenvalues;
}

ComplexMatrix total_magnetization() {
  return kron(pauli::z(), ComplexMatrix::identity(2)) + kron(ComplexMatrix::identity(2), pauli::z());
}

// Brute-force entanglement test of a pure two-qubit state.
bool reduced_state_is_mixed(const Eigen::Vector4cd& v) {
  const ComplexMatrix reduced = partial_trace(ComplexMatrix::projector(v), {2, 2}, Subsystem::A);
  const double min_eig =
      Eigen::SelfAdjointEigenSolver<DenseMatrix>(reduced.dense()).eigenvalues().minCoeff();
  return min_eig > 1e-10;
}

}  // namespace

TEST(AssembleBipartite, ZeroAndLocalTerms) {
  const HermitianOperator z2(ComplexMatrix::zero(2));
  const HermitianOperator z4(ComplexMatrix::zero(4));
  EXPECT_TRUE(assemble_bipartite({z2, z2, z4}).matrix().approx_equal(ComplexMatrix::zero(4), 0.0));
  EXPECT_TRUE(assemble_bipartite({HermitianOperator(pauli::z()), z2, z4})
                  .matrix()
                  .approx_equal(ComplexMatrix::diagonal({1, 1, -1, -1}), 0.0));
}

TEST(AssembleBipartite, XYMatrixEntries) {
  const HermitianOperator h = assemble_bipartite(xy_hamiltonian({3.0, 1.0, 1.0}));
  DenseMatrix expected = DenseMatrix::Zero(4, 4);
  expected.diagonal() << 4.0, 2.0, -2.0, -4.0;
  expected(1, 2) = 2.0;
  expected(2, 1) = 2.0;
  EXPECT_TRUE(h.matrix().approx_equal(ComplexMatrix(expected), 1e-15));
}

TEST(AssembleBipartite, DimensionMismatchRejected) {
  const HermitianOperator z2(ComplexMatrix::zero(2));
  const HermitianOperator z3(ComplexMatrix::zero(3));
  EXPECT_THROW(BipartiteHamiltonian(z2, z3, HermitianOperator(ComplexMatrix::zero(4))), ArgumentError);
}

TEST(AssembleBipartite, LinearInEachPart) {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const BipartiteHamiltonian x = random_bipartite(2, 3, 1.0, 100 + trial);
    const BipartiteHamiltonian y = random_bipartite(2, 3, 1.0, 200 + trial);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    const double a = coef(rng);
    const double b = coef(rng);
    auto combo = [&](const HermitianOperator& u, const HermitianOperator& v) {
      return HermitianOperator(Complex(a) * u.matrix() + Complex(b) * v.matrix());
    };
    const BipartiteHamiltonian mixed(combo(x.h_a(), y.h_a()), combo(x.h_b(), y.h_b()),
                                     combo(x.h_int(), y.h_int()));
    const ComplexMatrix lhs = assemble_bipartite(mixed).matrix();
    const ComplexMatrix rhs = Complex(a) * assemble_bipartite(x).matrix() +
                              Complex(b) * assemble_bipartite(y).matrix();
    EXPECT_TRUE(lhs.approx_equal(rhs, 1e-12));
  }
}

TEST(XYHamiltonian, Spectra) {
  for (double e : spectrum({0, 0, 0})) EXPECT_EQ(e, 0.0);

  const auto s1 = spectrum({0.5, 0.5, 1.0});
  const double e1[] = {-2, -1, 1, 2};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s1[i], e1[i], 1e-12);

  const auto s2 = spectrum({3.0, 1.0, 1.0});
  const double e2[] = {-4, -std::sqrt(8.0), std::sqrt(8.0), 4};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(s2[i], e2[i], 1e-12);
}

TEST(XYHamiltonian, RejectsNonFiniteParams) {
  EXPECT_THROW(xy_hamiltonian({NAN, 0, 1}), ArgumentError);
  EXPECT_THROW(xy_hamiltonian({0, INFINITY, 1}), ArgumentError);
}

TEST(XYHamiltonian, CommutesWithTotalMagnetization) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  const ComplexMatrix m = total_magnetization();
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix h = assemble_bipartite(xy_hamiltonian({u(rng), u(rng), u(rng)})).matrix();
    EXPECT_LE((h * m - m * h).frobenius_norm(), 1e-12);
  }
}

TEST(XYHamiltonian, ZeroFieldSpectrumSymmetric) {
  for (double g : {0.3, 1.0, 2.5}) {
    const auto s = spectrum({0, 0, g});
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(s[i], -s[3 - i], 1e-12);
  }
}

TEST(XYGroundState, SymmetricFieldSinglet) {
  const GroundStateInfo gs = xy_ground_state({0.5, 0.5, 1.0});
  EXPECT_EQ(gs.classification, GroundStateClass::Entangled);
  EXPECT_NEAR(gs.energy, -2.0, 1e-12);
  Eigen::Vector4cd expected(0.0, 1.0, -1.0, 0.0);
  expected /= std::sqrt(2.0);
  EXPECT_LE((gs.state_vector - expected).norm(), 1e-12);
  EXPECT_NEAR(gs.normalization, std::sqrt(2.0), 1e-12);
}

TEST(XYGroundState, StrongFieldIsBasisState) {
  const GroundStateInfo gs = xy_ground_state({3.0, 1.0, 1.0});
  EXPECT_EQ(gs.classification, GroundStateClass::Separable);
  EXPECT_NEAR(gs.energy, -4.0, 1e-12);
  // sigma_z |up> = +|up>, so positive fields favour |dd>.
  EXPECT_NEAR(std::abs(gs.state_vector(3)), 1.0, 1e-12);
  EXPECT_EQ(gs.normalization, 1.0);
}

TEST(XYGroundState, ThresholdIsBoundary) {
  EXPECT_EQ(xy_ground_state({1.0, 1.0, 1.0}).classification, GroundStateClass::Boundary);
  EXPECT_EQ(xy_ground_state({2.0, 0.5, -1.0}).classification, GroundStateClass::Boundary);
  EXPECT_EQ(xy_ground_state({0.0, 0.0, 0.0}).classification, GroundStateClass::Boundary);
}

TEST(XYGroundState, EigenResidualAndPhase) {
  std::mt19937 rng(21);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int trial = 0; trial < 100; ++trial) {
    const XYParams p{u(rng), u(rng), u(rng)};
    const GroundStateInfo gs = xy_ground_state(p);
    const DenseMatrix h = assemble_bipartite(xy_hamiltonian(p)).dense();
    EXPECT_LE((h * gs.state_vector - gs.energy * gs.state_vector).norm(), 1e-10);
    EXPECT_NEAR(gs.state_vector.norm(), 1.0, 1e-12);
    int first = 0;
    while (std::abs(gs.state_vector(first)) <= 1e-10) ++first;
    EXPECT_GT(gs.state_vector(first).real(), 0.0);
    EXPECT_EQ(gs.state_vector(first).imag(), 0.0);
  }
}

// Classification vs. brute-force reduced-state test on a 50x50 grid of
// (b1*b2, g), skipping the band around the threshold and g = 0, where the
// XY ground state is a basis state whatever the fields.
TEST(XYGroundState, ClassificationMatchesBruteForceEntanglement) {
  int checked = 0;
  for (int i = 0; i < 50; ++i) {
    const double product = -4.0 + 8.0 * i / 49.0;
    for (int j = 0; j < 50; ++j) {
      const double g = 0.1 + 2.4 * j / 49.0;
      if (std::abs(product - g * g) < 0.05) continue;
      const double mag = std::sqrt(std::abs(product));
      const double sign = (i + j) % 2 == 0 ? 1.0 : -1.0;
      const double b1 = sign * 1.3 * mag;
      const double b2 = sign * (product < 0 ? -1.0 : 1.0) * mag / 1.3;
      const GroundStateInfo gs = xy_ground_state({b1, b2, g});
      ASSERT_NE(gs.classification, GroundStateClass::Boundary) << b1 << " " << b2 << " " << g;
      EXPECT_EQ(gs.classification == GroundStateClass::Entangled, reduced_state_is_mixed(gs.state_vector))
          << "b1=" << b1 << " b2=" << b2 << " g=" << g;
      ++checked;
    }
  }
  EXPECT_GT(checked, 2300);
}

TEST(RandomBipartite, DeterministicPerSeed) {
  const BipartiteHamiltonian x = random_bipartite(2, 3, 0.7, 42);
  const BipartiteHamiltonian y = random_bipartite(2, 3, 0.7, 42);
  const BipartiteHamiltonian z = random_bipartite(2, 3, 0.7, 43);
  EXPECT_EQ(x.h_a().dense(), y.h_a().dense());
  EXPECT_EQ(x.h_b().dense(), y.h_b().dense());
  EXPECT_EQ(x.h_int().dense(), y.h_int().dense());
  EXPECT_NE(x.h_a().dense(), z.h_a().dense());
  EXPECT_EQ(x.dims(), (DimPair{2, 3}));
}

TEST(RandomBipartite, ScaleZeroRemovesInteraction) {
  const BipartiteHamiltonian bh = random_bipartite(3, 3, 0.0, 9);
  EXPECT_EQ(bh.h_int().matrix().frobenius_norm(), 0.0);
  EXPECT_GT(bh.h_a().matrix().frobenius_norm(), 0.0);
}

TEST(RandomBipartite, EntryStatistics) {
  // (G + G^+)/2 with E|g|^2 = 1 gives E|h_ij|^2 = 1/2 on and off the diagonal.
  double off = 0.0, diag = 0.0;
  int n_off = 0, n_diag = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const DenseMatrix& h = random_bipartite(4, 4, 1.0, seed).h_int().dense();
    for (Eigen::Index i = 0; i < h.rows(); ++i)
      for (Eigen::Index j = 0; j < h.cols(); ++j) {
        if (i == j) {
          diag += std::norm(h(i, j));
          ++n_diag;
        } else {
          off += std::norm(h(i, j));
          ++n_off;
        }
      }
  }
  EXPECT_NEAR(diag / n_diag, 0.5, 0.03);
  EXPECT_NEAR(off / n_off, 0.5, 0.02);
}

TEST(RandomBipartite, RejectsSmallDims) {
  EXPECT_THROW(random_bipartite(1, 2, 1.0, 0), ArgumentError);
  EXPECT_THROW(random_bipartite(2, 2, -1.0, 0), ArgumentError);
}
