#include "gibbsmi/serialize.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <locale>
#include <ostream>
#include <sstream>
#include <utility>

#include "gibbsmi/errors.hpp"

namespace gibbsmi {

namespace {

using Field = std::pair<const char*, double SweepRecord::*>;

// Column order of kCsvHeader.
constexpr std::array<Field, 17> kFields{{
    {"beta_inv", &SweepRecord::beta_inv},
    {"g", &SweepRecord::g},
    {"b1", &SweepRecord::b1},
    {"b2", &SweepRecord::b2},
    {"mutual_info", &SweepRecord::mutual_info},
    {"upper_bound", &SweepRecord::upper_bound},
    {"gap", &SweepRecord::gap},
    {"s_a", &SweepRecord::s_a},
    {"s_b", &SweepRecord::s_b},
    {"s_ab", &SweepRecord::s_ab},
    {"e_total", &SweepRecord::e_total},
    {"e_a", &SweepRecord::e_a},
    {"e_b", &SweepRecord::e_b},
    {"e_int", &SweepRecord::e_int},
    {"log_z_a", &SweepRecord::log_z_a},
    {"log_z_b", &SweepRecord::log_z_b},
    {"log_z_ab", &SweepRecord::log_z_ab},
}};

nlohmann::ordered_json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  // Round-trip through the 15-digit text so JSON shows the CSV digits.
  return std::strtod(format_number(x).c_str(), nullptr);
}

double parse_number(const std::string& text) {
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  if (text == "inf") return INFINITY;
  if (text == "-inf") return -INFINITY;
  if (text == "nan") return NAN;
  double x = 0.0;
  is >> x;
  if (is.fail() || !is.eof()) throw ArgumentError("read_csv: malformed number '" + text + "'");
  return x;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(15);
  os << x;
  return os.str();
}

std::string csv_row(const SweepRecord& r) {
  std::string row;
  for (std::size_t i = 0; i < kFields.size(); ++i) {
    if (i) row += ',';
    row += format_number(r.*(kFields[i].second));
  }
  return row;
}

void write_csv(std::ostream& os, std::span<const SweepRecord> records) {
  os << kCsvHeader << '\n';
  for (const SweepRecord& r : records) os << csv_row(r) << '\n';
}

std::vector<SweepRecord> read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != kCsvHeader) {
    throw ArgumentError("read_csv: unexpected header");
  }
  std::vector<SweepRecord> out;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    SweepRecord r;
    std::istringstream fields(line);
    std::string cell;
    std::size_t i = 0;
    while (std::getline(fields, cell, ',')) {
      if (i >= kFields.size()) throw ArgumentError("read_csv: too many columns");
      r.*(kFields[i++].second) = parse_number(cell);
    }
    if (i != kFields.size()) throw ArgumentError("read_csv: too few columns");
    out.push_back(r);
  }
  return out;
}

nlohmann::ordered_json to_json(const SweepRecord& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, member] : kFields) j[name] = json_number(r.*member);
  return j;
}

nlohmann::ordered_json to_json(const ExploreSpec& spec, const ExploreSummary& summary) {
  nlohmann::ordered_json betas = nlohmann::ordered_json::array();
  for (double b : spec.betas) betas.push_back(json_number(b));

  nlohmann::ordered_json j;
  j["d_a"] = spec.d_a;
  j["d_b"] = spec.d_b;
  j["samples"] = spec.samples;
  j["beta_list"] = std::move(betas);
  j["scale"] = json_number(spec.interaction_scale);
  j["seed"] = spec.seed;
  j["evaluations"] = summary.evaluations;
  j["violations"] = summary.violations;
  j["gap_min"] = json_number(summary.gap_min);
  j["gap_mean"] = json_number(summary.gap_mean);
  j["gap_max"] = json_number(summary.gap_max);
  j["max_abs_mutual_info"] = json_number(summary.max_abs_mutual_info);
  j["worst_seed"] = summary.worst_seed;
  j["worst_beta"] = json_number(summary.worst_beta);
  return j;
}

}  // namespace gibbsmi
