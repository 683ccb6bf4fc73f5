#pragma once

// Command-line front end: JSON run configuration, subcommand dispatch and
// the report envelope / CSV writers.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lindex/error.hpp"
#include "lindex/polydisc.hpp"

namespace lindex::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "lindex";
inline constexpr const char* kToolVersion = "1.0.0";

/// Bad configuration: JSON syntax (with line, column and byte offset) or
/// schema (with the JSON pointer of the offending value).
class ConfigError : public Error {
public:
  using Error::Error;
};

/// A set of points of C^n described in the config.
struct PointSet {
  /// "polydisc", "segment" or "points".
  std::string kind = "polydisc";
  std::vector<Complex> center;
  std::vector<double> radius;
  int radial = 6;
  int angular = 16;
  std::vector<Complex> from;
  std::vector<Complex> to;
  int count = 9;
  std::vector<std::vector<Complex>> points;
};

struct RunConfig {
  int arity = 1;
  std::optional<std::string> function;
  std::vector<std::string> weights;  // defaults to "1" per variable
  std::uint64_t seed = 0;

  struct Grid {
    int angular = 32;
    int radial = 8;
    int refinement = 4;
    std::size_t sample_cap = 1'000'000;
  } grid;

  PointSet z_grid;
  std::vector<std::vector<Complex>> points;
  std::vector<std::vector<int>> multi_indices;

  struct Index {
    int m_max = 6;
    int j_max = 10;
  } index;

  struct Local {
    bool enabled = false;
    std::vector<double> inner;
    std::vector<double> outer;
    PointSet centers;
  } local_behavior;

  std::vector<std::vector<double>> rays;
  std::vector<double> r_seq;

  struct Thm2 {
    std::vector<double> base_radius;
    /// "verbatim", "composed" or "both".
    std::string mode = "verbatim";
    std::vector<std::vector<int>> permutations;  // one-based; empty = default set
  } thm2;

  struct Thm3 {
    std::optional<int> N;
    std::optional<int> pivot;  // one-based; empty = largest radius
    int intervals = 2048;
  } thm3;

  struct Classify {
    /// "Q", "K" or "both".
    std::string which = "both";
    std::vector<double> radius;
    std::vector<double> r_grid;
    double blowup = 1e6;
    double growth_factor = 10.0;
  } classify;

  struct Prop1 {
    bool enabled = false;
    std::vector<std::string> components;
    double c = 1.0;
    std::vector<std::vector<double>> radii;
    PointSet domain;
  } prop1;

  struct Probe {
    bool enabled = false;
    int component = 1;
    std::vector<Complex> center;
    double theta = 0.0;
    std::vector<double> r_list;
    double bound = 10.0;
  } probe;

  struct Gap {
    std::vector<int> N;
    std::vector<double> C;
  } gap;

  struct Convexity {
    std::vector<double> lo;
    std::vector<double> hi;
    int points = 16;
  } convexity;

  struct Sweep {
    std::vector<double> factors;
    std::vector<std::vector<double>> radii;  // empty = every ray at every r_seq entry
  } sweep;

  struct Tolerances {
    double quadrature = 1e-6;
  } tolerances;
};

/// Parses and validates a JSON config, filling every default. Throws
/// ConfigError.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

/// The effective configuration; parse_config(to_json(c).dump()) == c.
Json to_json(const RunConfig& c);

/// Expands a point set into points of C^n.
std::vector<CPoint> expand(const PointSet& set, int arity, std::size_t cap);

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> list{"parse", "eval",    "deriv",     "index", "classify",
                                             "growth", "verdict", "gap", "convexity", "sweep"};
  return list;
}

struct Options {
  std::string command;
  std::string config_path;
  std::optional<std::string> out_path;
  std::optional<std::string> csv_path;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  bool fixed_clock = false;
};

struct Outcome {
  Json envelope;
  std::string csv;  // empty when the command writes no series
  int exit_code = 0;
};

/// Runs one command on an already parsed configuration.
Outcome execute(const std::string& command, const RunConfig& config, bool fixed_clock);

/// Full command line (args excludes the program name). Returns the exit
/// code: 0 done, 1 a violated/inconsistent verdict, 2 configuration or
/// parse error, 3 numerical failure.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal text.
std::string format_number(double x);

}  // namespace lindex::cli
