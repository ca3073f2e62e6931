#include "gibbsmi/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "gibbsmi/errors.hpp"

namespace gibbsmi {

SweepSpec default_temperature_sweep(double b1, double b2, double g) {
  SweepSpec spec;
  spec.mode = SweepMode::Temperature;
  spec.fixed = {b1, b2, g};
  spec.axis_min = 0.1;
  spec.axis_max = 10.0;
  spec.points = 200;
  spec.spacing = Spacing::Log;
  return spec;
}

SweepSpec default_coupling_sweep(double b1, double b2, double beta_inv) {
  SweepSpec spec;
  spec.mode = SweepMode::Coupling;
  spec.fixed = {b1, b2, 0.0};
  spec.beta_inv = beta_inv;
  spec.axis_min = 0.0;
  spec.axis_max = 5.0;
  spec.points = 201;
  spec.spacing = Spacing::Linear;
  return spec;
}

void validate(const SweepSpec& spec) {
  auto fail = [](const std::string& what) { throw ArgumentError("invalid sweep: " + what); };
  if (!std::isfinite(spec.axis_min) || !std::isfinite(spec.axis_max)) fail("axis bounds must be finite");
  if (!(spec.axis_min < spec.axis_max)) fail("axis_min must be below axis_max");
  if (spec.points < 2) fail("at least 2 points required");
  if (spec.spacing == Spacing::Log && spec.axis_min <= 0.0) fail("log spacing needs axis_min > 0");
  if (!std::isfinite(spec.fixed.b1) || !std::isfinite(spec.fixed.b2) || !std::isfinite(spec.fixed.g))
    fail("model parameters must be finite");
  if (spec.mode == SweepMode::Temperature && spec.axis_min <= 0.0)
    fail("temperature axis must be positive");
  if (spec.mode == SweepMode::Coupling && !(spec.beta_inv > 0.0 && std::isfinite(spec.beta_inv)))
    fail("beta_inv must be positive and finite");
}

std::vector<double> axis_grid(const SweepSpec& spec) {
  validate(spec);
  const std::size_t n = spec.points;
  std::vector<double> grid(n);
  const double last = static_cast<double>(n - 1);
  if (spec.spacing == Spacing::Linear) {
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / last;
      grid[i] = spec.axis_min + (spec.axis_max - spec.axis_min) * t;
    }
  } else {
    const double lo = std::log(spec.axis_min);
    const double hi = std::log(spec.axis_max);
    for (std::size_t i = 0; i < n; ++i) {
      grid[i] = std::exp(lo + (hi - lo) * static_cast<double>(i) / last);
    }
  }
  grid.front() = spec.axis_min;
  grid.back() = spec.axis_max;
  return grid;
}

SweepRecord evaluate_xy_point(const XYParams& p, double beta_inv) {
  if (!(beta_inv > 0.0) || std::isnan(beta_inv)) {
    throw ArgumentError("evaluate_xy_point: beta_inv must be positive");
  }
  // beta_inv = +inf maps to beta = 0.
  const double beta = 1.0 / beta_inv;
  const BoundEvaluation ev = evaluate_bound(xy_hamiltonian(p), beta);

  SweepRecord r;
  r.beta_inv = beta_inv;
  r.g = p.g;
  r.b1 = p.b1;
  r.b2 = p.b2;
  r.mutual_info = ev.info.mutual_info;
  r.upper_bound = ev.info.upper_bound;
  r.gap = r.upper_bound - r.mutual_info;
  r.s_a = ev.info.s_a;
  r.s_b = ev.info.s_b;
  r.s_ab = ev.info.s_ab;
  r.e_total = ev.energy.e_total;
  r.e_a = ev.energy.e_a;
  r.e_b = ev.energy.e_b;
  r.e_int = ev.energy.e_int;
  r.log_z_a = ev.info.log_z_a;
  r.log_z_b = ev.info.log_z_b;
  r.log_z_ab = ev.info.log_z_ab;
  return r;
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, unsigned threads) {
  const std::vector<double> grid = axis_grid(spec);
  std::vector<SweepRecord> out(grid.size());

  auto evaluate = [&](std::size_t i) {
    XYParams p = spec.fixed;
    if (spec.mode == SweepMode::Temperature) {
      out[i] = evaluate_xy_point(p, grid[i]);
    } else {
      p.g = grid[i];
      out[i] = evaluate_xy_point(p, spec.beta_inv);
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(threads, 1, grid.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) evaluate(i);
    return out;
  }

  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < grid.size(); i += workers) evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::array<Fig1Panel, 6> fig1_suite(unsigned threads) {
  constexpr std::array<std::array<double, 2>, 3> fields{{{0.5, 0.5}, {2.0, 2.0}, {3.0, 1.0}}};
  std::array<Fig1Panel, 6> panels;
  for (std::size_t k = 0; k < 3; ++k) {
    const auto [b1, b2] = fields[k];
    panels[k].label = static_cast<char>('a' + k);
    panels[k].spec = default_temperature_sweep(b1, b2, 1.0);
    panels[k + 3].label = static_cast<char>('d' + k);
    panels[k + 3].spec = default_coupling_sweep(b1, b2, 1.0);
  }
  for (Fig1Panel& panel : panels) panel.records = run_sweep(panel.spec, threads);
  return panels;
}

ExploreSummary explore_bound(const ExploreSpec& spec) {
  if (spec.d_a < 2 || spec.d_b < 2) throw ArgumentError("explore_bound: dimensions must be >= 2");
  if (spec.samples < 1) throw ArgumentError("explore_bound: need at least one sample");
  if (spec.betas.empty()) throw ArgumentError("explore_bound: beta list is empty");

  ExploreSummary summary;
  summary.gap_min = std::numeric_limits<double>::infinity();
  summary.gap_max = -std::numeric_limits<double>::infinity();
  double gap_sum = 0.0;

  for (std::size_t k = 0; k < spec.samples; ++k) {
    const std::uint64_t sample_seed = spec.seed + k;
    const BipartiteHamiltonian bh =
        random_bipartite(spec.d_a, spec.d_b, spec.interaction_scale, sample_seed);
    for (double beta : spec.betas) {
      const InfoReport info = evaluate_bound(bh, beta).info;
      const double gap = info.upper_bound - info.mutual_info;
      ++summary.evaluations;
      gap_sum += gap;
      if (gap < -kViolationTol) ++summary.violations;
      if (gap < summary.gap_min) {
        summary.gap_min = gap;
        summary.worst_seed = sample_seed;
        summary.worst_beta = beta;
      }
      summary.gap_max = std::max(summary.gap_max, gap);
      summary.max_abs_mutual_info = std::max(summary.max_abs_mutual_info, std::abs(info.mutual_info));
    }
  }
  summary.gap_mean = gap_sum / static_cast<double>(summary.evaluations);
  return summary;
}

}  // namespace gibbsmi
