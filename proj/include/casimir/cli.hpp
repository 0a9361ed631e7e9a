#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casimir/analysis.hpp"
#include "casimir/types.hpp"

namespace casimir::cli {

enum class Command { Profile, Force, Sweep, Optimize, Verify };
enum class Format { Csv, Json, Svg };

std::string to_string(Command command);
std::string to_string(Format format);

/// Fully resolved invocation: every field holds its final value after
/// defaults, the optional JSON config file and explicit flags are layered.
struct RunConfig {
  Command command = Command::Force;
  double a = 4e-7;
  double R = 4e-6;
  double L = 1.0;
  double phi_deg = 1.0;
  Units units = Units::SI;
  double tol = 1e-9;
  int samples = 512;
  int wing_count = 1;
  std::string out = "-";
  Format format = Format::Json;
  SweepAxis axis = SweepAxis::Phi;
  std::vector<double> values;  ///< sweep values; degrees on the phi axis
  double lo_deg = 0.1;
  double hi_deg = 44.9;
  double opt_tol = 1e-5;  ///< radians
  int workers = 1;
  std::string quantity = "p_z";

  CavitySpec cavity() const;
  bool operator==(const RunConfig&) const = default;
};

/// Parses arguments (without the program name). Throws Error with kind Usage
/// or InvalidCavity, naming the offending flag in field().
RunConfig parse_args(const std::vector<std::string>& args);

/// Canonical flag rendering; parse_args(render_args(c)) == c.
std::vector<std::string> render_args(const RunConfig& config);

/// Executes a parsed config. Returns 0 on success, 1 on numerical failure
/// (a JSON error object is written to `err`).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args + run, mapping usage errors to exit code 2.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace casimir::cli
