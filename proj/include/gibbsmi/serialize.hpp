#pragma once

// CSV and JSON encodings of sweep records and explore summaries.
// Numbers carry 15 significant digits in both formats, so a value printed
// in CSV and in JSON is the same decimal.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "gibbsmi/models.hpp"
#include "gibbsmi/sweep.hpp"

namespace gibbsmi {

inline constexpr const char* kCsvHeader =
    "beta_inv,g,b1,b2,mutual_info,upper_bound,gap,s_a,s_b,s_ab,e_total,e_a,e_b,e_int,"
    "log_z_a,log_z_b,log_z_ab";

/// %.15g in the classic locale; non-finite values print as inf, -inf, nan.
std::string format_number(double x);

std::string csv_row(const SweepRecord& r);
void write_csv(std::ostream& os, std::span<const SweepRecord> records);
/// Throws ArgumentError on a header mismatch or malformed row.
std::vector<SweepRecord> read_csv(std::istream& is);

/// Flat object with the CSV field names. Non-finite numbers become null.
nlohmann::ordered_json to_json(const SweepRecord& r);
nlohmann::ordered_json to_json(const ExploreSpec& spec, const ExploreSummary& summary);

}  // namespace gibbsmi
