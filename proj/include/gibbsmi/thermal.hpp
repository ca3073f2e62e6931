#pragma once

#include "gibbsmi/models.hpp"
#include "gibbsmi/operator_core.hpp"

namespace gibbsmi {

/// rho = exp(-beta H) / Z on a bipartite space, with ln Z kept separately
/// so it stays finite when Z itself would overflow.
class ThermalState {
 public:
  /// Validates rho: unit trace (1e-12), Hermitian, eigenvalues >= -1e-12.
  /// Throws InvalidStateError otherwise, ArgumentError on a bad beta or dims.
  ThermalState(ComplexMatrix rho, double beta, double log_z, DimPair dims);

  const ComplexMatrix& rho() const { return rho_; }
  double beta() const { return beta_; }
  double log_z() const { return log_z_; }
  DimPair dims() const { return dims_; }

 private:
  ComplexMatrix rho_;
  double beta_;
  double log_z_;
  DimPair dims_;
};

struct EnergyBreakdown {
  double e_total = 0.0;  // Tr[rho H]
  double e_a = 0.0;      // Tr[rho_A H_A]
  double e_b = 0.0;      // Tr[rho_B H_B]
  double e_int = 0.0;    // Tr[rho H_int]
};

/// Gibbs state of a single subsystem's own Hamiltonian.
struct LocalGibbsState {
  ComplexMatrix rho_tilde;
  double log_z_local;
};

struct ReducedStates {
  ComplexMatrix rho_a;
  ComplexMatrix rho_b;
};

/// Throws ArgumentError for negative or non-finite beta, or when
/// dim(h) != dims.total(). Large beta is fine: weights are shifted by the
/// minimum eigenvalue, so only the ground level survives instead of overflowing.
ThermalState gibbs_state(const HermitianOperator& h, double beta, DimPair dims);

ReducedStates subsystem_states(const ThermalState& ts);

LocalGibbsState local_gibbs_state(const HermitianOperator& h_local, double beta);

/// Requires `ts` to be the Gibbs state of assemble_bipartite(bh).
EnergyBreakdown energy_breakdown(const BipartiteHamiltonian& bh, const ThermalState& ts);

}  // namespace gibbsmi
