#pragma once

#include <optional>
#include <string>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

struct OracleReport {
  std::string quantity;
  double closed_form = 0.0;
  double oracle = 0.0;
  double relative_deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerifyOptions {
  int angle_samples = 64;
  int riemann_n = 512;   ///< coarse grid; a 2n grid is added for Richardson extrapolation
  double force_tolerance = 1e-4;
  int workers = 1;
  /// Fault-injection hook: replaces the prefactor K used on the primary path only.
  std::optional<double> primary_k_override;
};

/// Every oracle-vs-primary comparison for one cavity: limit angles, ray scale
/// and ray length, closed-form inner integrals against adaptive quadrature,
/// one mid-wing pressure pair, and both total forces against the Riemann sums.
/// Failures are reported, never thrown.
std::vector<OracleReport> verify_suite(const CavitySpec& spec, const VerifyOptions& opts = {});

bool all_pass(const std::vector<OracleReport>& reports);

}  // namespace casimir
