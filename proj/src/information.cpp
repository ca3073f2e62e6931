#include "gibbsmi/information.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gibbsmi/errors.hpp"

namespace gibbsmi {

namespace {

constexpr double kStateTraceTol = 1e-10;
constexpr double kClipTol = 1e-10;

// Validated spectrum of a density matrix with roundoff negatives clipped.
SpectralDecomposition density_spectrum(const ComplexMatrix& rho, const char* who) {
  const double trace_err = std::abs(rho.trace() - Complex(1.0));
  if (trace_err > kStateTraceTol) {
    std::ostringstream msg;
    msg << who << ": trace deviates from 1 by " << trace_err;
    throw InvalidStateError(msg.str());
  }
  const DenseMatrix& d = rho.dense();
  if ((d - d.adjoint()).norm() > kHermTol * std::max(1.0, d.norm())) {
    throw InvalidStateError(std::string(who) + ": density matrix is not Hermitian");
  }
  SpectralDecomposition spec = eigh(HermitianOperator(rho));
  for (double& p : spec.eigenvalues) {
    if (p < -kClipTol) {
      std::ostringstream msg;
      msg << who << ": density matrix has eigenvalue " << p;
      throw InvalidStateError(msg.str());
    }
    p = std::max(p, 0.0);
  }
  return spec;
}

double entropy_of(const std::vector<double>& probabilities) {
  double s = 0.0;
  for (double p : probabilities) {
    if (p > kZeroProbability) s -= p * std::log(p);
  }
  return std::max(s, 0.0);
}

}  // namespace

double von_neumann_entropy(const ComplexMatrix& rho) {
  return entropy_of(density_spectrum(rho, "von_neumann_entropy").eigenvalues);
}

double relative_entropy(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw ArgumentError("relative_entropy: dimension mismatch");
  const SpectralDecomposition r = density_spectrum(rho, "relative_entropy(rho)");
  const SpectralDecomposition s = density_spectrum(sigma, "relative_entropy(sigma)");

  // overlap(i, j) = |<r_i|s_j>|^2
  const Eigen::MatrixXd overlap =
      (r.eigenvectors.dense().adjoint() * s.eigenvectors.dense()).cwiseAbs2();

  double cross = 0.0;  // Tr[rho ln sigma]
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    const double p = r.eigenvalues[i];
    if (p <= kZeroProbability) continue;
    for (std::size_t j = 0; j < s.eigenvalues.size(); ++j) {
      const double w = overlap(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      const double q = s.eigenvalues[j];
      if (q <= kZeroProbability) {
        if (w > kSupportTol) return std::numeric_limits<double>::infinity();
        continue;
      }
      cross += p * w * std::log(q);
    }
  }
  return -entropy_of(r.eigenvalues) - cross;
}

double entropy_identity_residual(const ThermalState& ts, const EnergyBreakdown& eb) {
  return von_neumann_entropy(ts.rho()) - ts.beta() * eb.e_total - ts.log_z();
}

double mutual_information(const ComplexMatrix& rho_ab, DimPair dims) {
  return von_neumann_entropy(partial_trace(rho_ab, dims, Subsystem::A)) +
         von_neumann_entropy(partial_trace(rho_ab, dims, Subsystem::B)) -
         von_neumann_entropy(rho_ab);
}

double mutual_information(const ThermalState& ts) {
  return mutual_information(ts.rho(), ts.dims());
}

double subsystem_entropy_slack(const ComplexMatrix& rho_x, const HermitianOperator& h_x,
                               double beta) {
  if (rho_x.dim() != h_x.dim()) throw ArgumentError("subsystem_entropy_slack: dimension mismatch");
  const double energy = (rho_x.dense().transpose().cwiseProduct(h_x.dense())).sum().real();
  return beta * energy + local_gibbs_state(h_x, beta).log_z_local - von_neumann_entropy(rho_x);
}

BoundEvaluation evaluate_bound(const BipartiteHamiltonian& bh, double beta) {
  const ThermalState ts = gibbs_state(assemble_bipartite(bh), beta, bh.dims());
  const ReducedStates reduced = subsystem_states(ts);

  BoundEvaluation out;
  out.energy = energy_breakdown(bh, ts);

  InfoReport& info = out.info;
  info.beta = beta;
  info.s_a = von_neumann_entropy(reduced.rho_a);
  info.s_b = von_neumann_entropy(reduced.rho_b);
  info.s_ab = von_neumann_entropy(ts.rho());
  info.mutual_info = info.s_a + info.s_b - info.s_ab;
  info.log_z_a = local_gibbs_state(bh.h_a(), beta).log_z_local;
  info.log_z_b = local_gibbs_state(bh.h_b(), beta).log_z_local;
  info.log_z_ab = ts.log_z();
  info.e_int = out.energy.e_int;
  info.upper_bound = -beta * info.e_int + (info.log_z_a + info.log_z_b - info.log_z_ab);
  return out;
}

double mutual_info_upper_bound(const BipartiteHamiltonian& bh, double beta) {
  return evaluate_bound(bh, beta).info.upper_bound;
}

}  // namespace gibbsmi
