#include "gibbsmi/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "gibbsmi/errors.hpp"

namespace gibbsmi {

namespace {

constexpr double kTraceTol = 1e-12;
constexpr double kNegativeEigTol = 1e-12;
constexpr double kDecompositionTol = 1e-10;

void check_beta(double beta) {
  if (!std::isfinite(beta) || beta < 0.0) {
    std::ostringstream msg;
    msg << "beta must be finite and non-negative, got " << beta;
    throw ArgumentError(msg.str());
  }
}

struct Boltzmann {
  ComplexMatrix rho;
  double log_z;
};

Boltzmann boltzmann(const HermitianOperator& h, double beta) {
  check_beta(beta);
  const std::size_t d = h.dim();
  if (beta == 0.0) {
    return {Complex(1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d),
            std::log(static_cast<double>(d))};
  }

  const SpectralDecomposition spec = eigh(h);
  const double lambda_min = spec.min_eigenvalue();
  std::vector<double> weights;
  weights.reserve(d);
  double sum = 0.0;
  for (double lambda : spec.eigenvalues) {
    weights.push_back(std::exp(-beta * (lambda - lambda_min)));
    sum += weights.back();
  }
  for (double& w : weights) w /= sum;
  const double log_z = -beta * lambda_min + std::log(sum);
  if (!std::isfinite(log_z)) {
    std::ostringstream msg;
    msg << "ln Z overflows at beta = " << beta << " (lambda_min = " << lambda_min << ")";
    throw DomainError(msg.str());
  }
  return {spec.reconstruct(weights), log_z};
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr[A B] without forming the product.
  return (a.dense().transpose().cwiseProduct(b.dense())).sum().real();
}

}  // namespace

ThermalState::ThermalState(ComplexMatrix rho, double beta, double log_z, DimPair dims)
    : rho_(std::move(rho)), beta_(beta), log_z_(log_z), dims_(dims) {
  check_beta(beta_);
  if (!std::isfinite(log_z_)) throw ArgumentError("ThermalState: log_z must be finite");
  if (dims_.total() != rho_.dim()) throw ArgumentError("ThermalState: dims do not match rho");

  const double trace_err = std::abs(rho_.trace() - Complex(1.0));
  if (trace_err > kTraceTol) {
    std::ostringstream msg;
    msg << "ThermalState: trace deviates from 1 by " << trace_err;
    throw InvalidStateError(msg.str());
  }
  const DenseMatrix& d = rho_.dense();
  if ((d - d.adjoint()).norm() > kHermTol * std::max(1.0, d.norm())) {
    throw InvalidStateError("ThermalState: rho is not Hermitian");
  }
  const double min_eig = Eigen::SelfAdjointEigenSolver<DenseMatrix>(d, Eigen::EigenvaluesOnly)
                             .eigenvalues()
                             .minCoeff();
  if (min_eig < -kNegativeEigTol) {
    std::ostringstream msg;
    msg << "ThermalState: rho has negative eigenvalue " << min_eig;
    throw InvalidStateError(msg.str());
  }
}

ThermalState gibbs_state(const HermitianOperator& h, double beta, DimPair dims) {
  if (h.dim() != dims.total()) {
    std::ostringstream msg;
    msg << "gibbs_state: Hamiltonian dimension " << h.dim() << " does not match " << dims.d_a
        << "x" << dims.d_b;
    throw ArgumentError(msg.str());
  }
  Boltzmann b = boltzmann(h, beta);
  return ThermalState(std::move(b.rho), beta, b.log_z, dims);
}

ReducedStates subsystem_states(const ThermalState& ts) {
  return {partial_trace(ts.rho(), ts.dims(), Subsystem::A),
          partial_trace(ts.rho(), ts.dims(), Subsystem::B)};
}

LocalGibbsState local_gibbs_state(const HermitianOperator& h_local, double beta) {
  Boltzmann b = boltzmann(h_local, beta);
  return {std::move(b.rho), b.log_z};
}

EnergyBreakdown energy_breakdown(const BipartiteHamiltonian& bh, const ThermalState& ts) {
  if (!(bh.dims() == ts.dims())) throw ArgumentError("energy_breakdown: dimension mismatch");

  const ReducedStates reduced = subsystem_states(ts);
  EnergyBreakdown eb;
  eb.e_a = real_trace_product(reduced.rho_a, bh.h_a().matrix());
  eb.e_b = real_trace_product(reduced.rho_b, bh.h_b().matrix());
  eb.e_int = real_trace_product(ts.rho(), bh.h_int().matrix());
  eb.e_total = real_trace_product(ts.rho(), assemble_bipartite(bh).matrix());

  const double mismatch = std::abs(eb.e_total - (eb.e_a + eb.e_b + eb.e_int));
  if (mismatch > kDecompositionTol * std::max(1.0, std::abs(eb.e_total))) {
    std::ostringstream msg;
    msg << "energy_breakdown: E != E_A + E_B + E_int (mismatch " << mismatch << ")";
    throw NumericalError(msg.str());
  }
  return eb;
}

}  // namespace gibbsmi
