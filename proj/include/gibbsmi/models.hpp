#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "gibbsmi/operator_core.hpp"

namespace gibbsmi {

/// H = H_A (x) 1_B + 1_A (x) H_B + H_int, kept as its three parts.
class BipartiteHamiltonian {
 public:
  /// Throws ArgumentError unless dim(h_int) == dim(h_a) * dim(h_b).
  BipartiteHamiltonian(HermitianOperator h_a, HermitianOperator h_b, HermitianOperator h_int);

  const HermitianOperator& h_a() const { return h_a_; }
  const HermitianOperator& h_b() const { return h_b_; }
  const HermitianOperator& h_int() const { return h_int_; }
  DimPair dims() const { return {h_a_.dim(), h_b_.dim()}; }

 private:
  HermitianOperator h_a_;
  HermitianOperator h_b_;
  HermitianOperator h_int_;
};

HermitianOperator assemble_bipartite(const BipartiteHamiltonian& bh);

namespace pauli {
// Basis |up> = index 0, |down> = index 1, sigma_z |up> = +|up>.
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// Two spin-1/2 particles: fields b1, b2 along z and XY coupling g.
struct XYParams {
  double b1 = 0.0;
  double b2 = 0.0;
  double g = 0.0;
};

/// H_A = b1 sz, H_B = b2 sz, H_int = g (sx(x)sx + sy(x)sy).
/// Joint basis order: |uu>, |ud>, |du>, |dd>. Throws ArgumentError on non-finite params.
BipartiteHamiltonian xy_hamiltonian(const XYParams& p);

enum class GroundStateClass { Entangled, Separable, Boundary };

const char* to_string(GroundStateClass c);

struct GroundStateInfo {
  double energy = 0.0;
  Eigen::Vector4cd state_vector;  // unit norm, first non-negligible amplitude real positive
  GroundStateClass classification = GroundStateClass::Boundary;
  // C in v = (a|ud> - |du>) / C, i.e. 1 / |<du|v>|. Set to 1 when the |du>
  // amplitude vanishes (separable basis-state ground).
  double normalization = 1.0;
};

/// Half-width of the band around b1*b2 == g^2 reported as Boundary.
inline constexpr double kClassificationBand = 1e-12;

/// Ground state by exact diagonalization. Classification follows the
/// b1*b2 vs g^2 threshold; a degenerate ground level is always Boundary.
GroundStateInfo xy_ground_state(const XYParams& p);

/// Gaussian-Hermitian random model: each part is (G + G^+)/2 with standard
/// complex Gaussian G; H_int is multiplied by `interaction_scale`. Entries are
/// drawn H_A, H_B, H_int in row-major order from one mt19937_64 seeded with
/// `seed`, so the result is bit-identical for equal arguments.
BipartiteHamiltonian random_bipartite(std::size_t d_a, std::size_t d_b, double interaction_scale,
                                      std::uint64_t seed);

}  // namespace gibbsmi
