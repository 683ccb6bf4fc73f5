#include "report.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>

namespace lindex::cli {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

Json num(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

Json complex_out(Complex z) { return {{"re", num(z.real())}, {"im", num(z.imag())}}; }

Json point_out(const CPoint& z) {
  Json a = Json::array();
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j].imag() == 0.0) a.push_back(num(z[j].real()));
    else a.push_back(Json::array({num(z[j].real()), num(z[j].imag())}));
  }
  return a;
}

Json radius_out(const PolyRadius& R) {
  Json a = Json::array();
  for (double r : R.radii()) a.push_back(num(r));
  return a;
}

Json numbers_out(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(num(x));
  return a;
}

std::string csv_table(const std::vector<CsvRow>& rows) {
  std::string s = "ray_id,r,ln_M,thm2_bound,thm3_rhs,ratio,C_estimate\n";
  for (const auto& r : rows) {
    s += std::to_string(r.ray_id) + "," + format_number(r.r) + "," + format_number(r.ln_M) + "," +
         format_number(r.thm2_bound) + "," + format_number(r.thm3_rhs) + "," + format_number(r.ratio) +
         "," + format_number(r.C_estimate) + "\n";
  }
  return s;
}

namespace {

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

Json make_envelope(const std::string& command, const RunConfig& config, Json result,
                   const std::vector<std::string>& warnings, bool fixed_clock, double wall_seconds) {
  Json env;
  env["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  env["command"] = command;
  env["config"] = to_json(config);
  env["result"] = std::move(result);
  env["warnings"] = warnings;
  env["provenance"] = {{"tool_version", kToolVersion},
                       {"seed", config.seed},
                       {"fixed_clock", fixed_clock},
                       {"timestamp", fixed_clock ? std::string("1970-01-01T00:00:00Z") : utc_timestamp()},
                       {"wall_time_seconds", fixed_clock ? 0.0 : wall_seconds}};
  return env;
}

}  // namespace lindex::cli
