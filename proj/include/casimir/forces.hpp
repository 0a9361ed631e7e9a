#pragma once

#include <optional>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

struct ForceOptions {
  double rel_tol = 1e-9;
  int wing_count = 1;
  /// Replaces the pressure prefactor K of the units mode. Used to inject faults
  /// into the primary path when exercising the oracle comparison.
  std::optional<double> k_override;
};

/// Total forces on one wing, F = L * integral over r in [0, R] of the specific
/// pressures. With wing_count = 2 the mirrored lower wing is added: expulsion
/// doubles and the compression of the two wings cancels.
///
/// The expulsion integral is controlled against rel_tol * |F_z| since F_x may
/// vanish identically (parallel plates).
ForceResult total_forces(const CavitySpec& spec, const ForceOptions& opts = {});

struct PressureProfile {
  CavitySpec spec;
  std::vector<PressureSample> samples;
};

/// n uniformly spaced samples of the specific pressures over [0, R].
PressureProfile pressure_profile(const CavitySpec& spec, int n,
                                 std::optional<double> k_override = std::nullopt);

}  // namespace casimir
