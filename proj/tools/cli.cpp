#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"

#include "gibbsmi/errors.hpp"
#include "gibbsmi/models.hpp"
#include "gibbsmi/serialize.hpp"
#include "gibbsmi/sweep.hpp"

namespace gibbsmi::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { Csv, Json };

struct CliConfig {
  XYParams model;
  XYParams temperature_model{0.0, 0.0, 1.0};
  std::optional<double> beta;
  std::optional<double> beta_inv;
  std::optional<double> axis_min;
  std::optional<double> axis_max;
  std::optional<std::size_t> points;
  std::optional<std::string> spacing;
  std::string dims = "2x2";
  std::size_t samples = 200;
  double scale = 1.0;
  std::uint64_t seed = 0;
  std::vector<double> beta_list{0.1, 0.5, 1.0, 2.0, 10.0};
  std::string out;
  std::string format;
  unsigned threads = 1;
};

Format parse_format(const std::string& text, Format fallback) {
  if (text.empty()) return fallback;
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  throw UsageError("--format must be csv or json");
}

DimPair parse_dims(const std::string& text) {
  static const std::regex pattern(R"((\d+)[xX](\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw UsageError("--dims must look like AxB, e.g. 2x3");
  return {std::stoul(m[1].str()), std::stoul(m[2].str())};
}

// beta from whichever of --beta / --beta-inv was supplied.
double resolve_beta(const CliConfig& cfg) {
  if (cfg.beta) return *cfg.beta;
  if (*cfg.beta_inv <= 0.0) throw UsageError("--beta-inv must be positive");
  return 1.0 / *cfg.beta_inv;
}

void apply_grid_overrides(const CliConfig& cfg, SweepSpec& spec) {
  if (cfg.axis_min) spec.axis_min = *cfg.axis_min;
  if (cfg.axis_max) spec.axis_max = *cfg.axis_max;
  if (cfg.points) spec.points = *cfg.points;
  if (cfg.spacing) spec.spacing = *cfg.spacing == "log" ? Spacing::Log : Spacing::Linear;
}

// Writes `text` to cfg.out if given, else to `out`.
void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + cfg.out + "'");
  file << text;
  if (!file.flush()) throw IoError("failed writing '" + cfg.out + "'");
}

std::string records_text(const std::vector<SweepRecord>& records, Format format) {
  std::ostringstream os;
  if (format == Format::Csv) {
    write_csv(os, records);
  } else {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SweepRecord& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
  }
  return os.str();
}

int cmd_point(const CliConfig& cfg, std::ostream& out) {
  const double beta = resolve_beta(cfg);
  if (!std::isfinite(beta) || beta < 0.0) throw UsageError("--beta must be finite and >= 0");
  const double beta_inv = beta == 0.0 ? INFINITY : 1.0 / beta;
  const SweepRecord r = evaluate_xy_point(cfg.model, beta_inv);

  if (parse_format(cfg.format, Format::Json) == Format::Csv) {
    emit(cfg, out, records_text({r}, Format::Csv));
    return kOk;
  }
  const GroundStateInfo ground = xy_ground_state(cfg.model);
  nlohmann::ordered_json j = to_json(r);
  j["beta"] = std::strtod(format_number(beta).c_str(), nullptr);
  j["ground_state"] = to_string(ground.classification);
  j["ground_energy"] = std::strtod(format_number(ground.energy).c_str(), nullptr);
  emit(cfg, out, j.dump(2) + "\n");
  return kOk;
}

int cmd_sweep(const CliConfig& cfg, SweepMode mode, std::ostream& out) {
  SweepSpec spec;
  if (mode == SweepMode::Temperature) {
    const XYParams& p = cfg.temperature_model;
    spec = default_temperature_sweep(p.b1, p.b2, p.g);
  } else {
    const double beta_inv = cfg.beta || cfg.beta_inv ? 1.0 / resolve_beta(cfg) : 1.0;
    spec = default_coupling_sweep(cfg.model.b1, cfg.model.b2, beta_inv);
  }
  apply_grid_overrides(cfg, spec);
  const std::vector<SweepRecord> records = run_sweep(spec, cfg.threads);
  emit(cfg, out, records_text(records, parse_format(cfg.format, Format::Csv)));
  return kOk;
}

int cmd_fig1(const CliConfig& cfg, std::ostream& out) {
  const std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory '" + dir.string() + "': " + ec.message());

  for (const Fig1Panel& panel : fig1_suite(cfg.threads)) {
    const std::filesystem::path path = dir / (std::string("fig1_") + panel.label + ".csv");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path.string() + "'");
    write_csv(file, panel.records);
    if (!file.flush()) throw IoError("failed writing '" + path.string() + "'");
    out << path.string() << " (" << panel.records.size() << " rows)\n";
  }
  return kOk;
}

int cmd_explore(const CliConfig& cfg, std::ostream& out) {
  const DimPair dims = parse_dims(cfg.dims);
  ExploreSpec spec;
  spec.d_a = dims.d_a;
  spec.d_b = dims.d_b;
  spec.samples = cfg.samples;
  spec.betas = cfg.beta_list;
  spec.interaction_scale = cfg.scale;
  spec.seed = cfg.seed;
  const ExploreSummary summary = explore_bound(spec);
  emit(cfg, out, to_json(spec, summary).dump(2) + "\n");
  return summary.violations == 0 ? kOk : kViolation;
}

void add_model_flags(CLI::App* sub, XYParams& model, bool with_g) {
  sub->add_option("--b1", model.b1, "Field on spin A")->capture_default_str();
  sub->add_option("--b2", model.b2, "Field on spin B")->capture_default_str();
  if (with_g) sub->add_option("--g", model.g, "XY coupling constant")->capture_default_str();
}

void add_temperature_flags(CLI::App* sub, CliConfig& cfg) {
  auto* beta = sub->add_option("--beta", cfg.beta, "Inverse temperature");
  auto* beta_inv = sub->add_option("--beta-inv", cfg.beta_inv, "Temperature (1/beta)");
  beta->excludes(beta_inv);
}

void add_grid_flags(CLI::App* sub, CliConfig& cfg) {
  sub->add_option("--min", cfg.axis_min, "Axis start");
  sub->add_option("--max", cfg.axis_max, "Axis end");
  sub->add_option("--points", cfg.points, "Number of grid points")->check(CLI::PositiveNumber);
  sub->add_option("--spacing", cfg.spacing, "Grid spacing")->check(CLI::IsMember({"linear", "log"}));
}

void add_output_flags(CLI::App* sub, CliConfig& cfg, bool with_format) {
  sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  if (with_format) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }
  sub->add_option("--threads", cfg.threads, "Worker threads for grid evaluation")
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal-state mutual information and its interaction-energy bound", "gibbsmi"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* point = app.add_subcommand("point", "Evaluate one XY model point (JSON)");
  add_model_flags(point, cfg.model, true);
  add_temperature_flags(point, cfg);
  add_output_flags(point, cfg, true);

  auto* sweep_t = app.add_subcommand("sweep-temperature", "Sweep 1/beta at fixed coupling");
  add_model_flags(sweep_t, cfg.temperature_model, true);
  add_grid_flags(sweep_t, cfg);
  add_output_flags(sweep_t, cfg, true);

  auto* sweep_g = app.add_subcommand("sweep-coupling", "Sweep g at fixed temperature");
  add_model_flags(sweep_g, cfg.model, false);
  add_temperature_flags(sweep_g, cfg);
  add_grid_flags(sweep_g, cfg);
  add_output_flags(sweep_g, cfg, true);

  auto* fig1 = app.add_subcommand("fig1", "Write fig1_a.csv .. fig1_f.csv into --out directory");
  add_output_flags(fig1, cfg, false);

  auto* explore = app.add_subcommand("explore", "Random-model stress test of the bound (JSON)");
  explore->add_option("--dims", cfg.dims, "Subsystem dimensions AxB")->capture_default_str();
  explore->add_option("--samples", cfg.samples, "Number of random models")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  explore->add_option("--scale", cfg.scale, "Interaction scale")->capture_default_str();
  explore->add_option("--seed", cfg.seed, "Base seed; sample k uses seed + k")->capture_default_str();
  explore->add_option("--beta-list,--beta", cfg.beta_list, "Comma-separated inverse temperatures")
      ->delimiter(',');
  add_output_flags(explore, cfg, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));

    if (point->parsed()) {
      if (!cfg.beta && !cfg.beta_inv) throw UsageError("point requires --beta or --beta-inv");
      return cmd_point(cfg, out);
    }
    if (sweep_t->parsed()) return cmd_sweep(cfg, SweepMode::Temperature, out);
    if (sweep_g->parsed()) return cmd_sweep(cfg, SweepMode::Coupling, out);
    if (fig1->parsed()) return cmd_fig1(cfg, out);
    return cmd_explore(cfg, out);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const NumericalError& e) {
    err << "numerical validation failed: " << e.what() << "\n";
    return kNumerical;
  }
}

}  // namespace gibbsmi::cli
