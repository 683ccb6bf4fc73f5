#pragma once

// JSON and CSV helpers shared by the subcommands.

#include <string>
#include <vector>

#include "lindex/cli.hpp"

namespace lindex::cli {

/// A finite double as a JSON number; inf, -inf and nan as strings.
Json num(double x);
Json complex_out(Complex z);
Json point_out(const CPoint& z);
Json radius_out(const PolyRadius& R);
Json numbers_out(const std::vector<double>& v);

struct CsvRow {
  std::size_t ray_id = 0;
  double r = 0.0;
  double ln_M = 0.0;
  double thm2_bound = 0.0;
  double thm3_rhs = 0.0;
  double ratio = 0.0;
  double C_estimate = 0.0;
};

/// Header ray_id,r,ln_M,thm2_bound,thm3_rhs,ratio,C_estimate then one line
/// per row.
std::string csv_table(const std::vector<CsvRow>& rows);

Json make_envelope(const std::string& command, const RunConfig& config, Json result,
                   const std::vector<std::string>& warnings, bool fixed_clock, double wall_seconds);

}  // namespace lindex::cli
