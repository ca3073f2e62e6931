#pragma once

// Entropic functionals in nats, and the interaction-energy bound on the
// mutual information of a bipartite Gibbs state:
//
//   I(rho_AB) <= -beta E_int + ln(Z_A Z_B / Z_AB).

#include "gibbsmi/models.hpp"
#include "gibbsmi/operator_core.hpp"
#include "gibbsmi/thermal.hpp"

namespace gibbsmi {

/// Eigenvalues at or below this count as zero in p ln p and in support tests.
inline constexpr double kZeroProbability = 1e-14;
/// Overlap with the null space of sigma above this makes S(rho||sigma) infinite.
inline constexpr double kSupportTol = 1e-10;

struct InfoReport {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double mutual_info = 0.0;
  double upper_bound = 0.0;
  double log_z_a = 0.0;
  double log_z_b = 0.0;
  double log_z_ab = 0.0;
  double e_int = 0.0;
  double beta = 0.0;
};

/// S = -sum p ln p. Throws InvalidStateError if |Tr rho - 1| > 1e-10, rho is
/// not Hermitian, or an eigenvalue is below -1e-10; eigenvalues in
/// [-1e-10, 0) are clipped to zero.
double von_neumann_entropy(const ComplexMatrix& rho);

/// S(rho||sigma) = Tr[rho ln rho - rho ln sigma], or +infinity when the
/// support of rho is not contained in that of sigma.
double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// S(rho_AB) - beta E - ln Z_AB; zero up to roundoff for any Gibbs state.
double entropy_identity_residual(const ThermalState& ts, const EnergyBreakdown& eb);

/// S(rho_A) + S(rho_B) - S(rho_AB) for an arbitrary bipartite density matrix.
double mutual_information(const ComplexMatrix& rho_ab, DimPair dims);
double mutual_information(const ThermalState& ts);

/// beta E_X + ln Z_X - S(rho_X): slack of the one-subsystem entropy bound.
/// Equals S(rho_X || exp(-beta H_X)/Z_X), hence non-negative.
double subsystem_entropy_slack(const ComplexMatrix& rho_x, const HermitianOperator& h_x,
                               double beta);

struct BoundEvaluation {
  InfoReport info;
  EnergyBreakdown energy;
};

/// Builds the Gibbs state of `bh` at `beta` and evaluates every entropic and
/// energetic quantity in one pass.
BoundEvaluation evaluate_bound(const BipartiteHamiltonian& bh, double beta);

double mutual_info_upper_bound(const BipartiteHamiltonian& bh, double beta);

}  // namespace gibbsmi
