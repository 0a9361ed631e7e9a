#pragma once

#include <string>
#include <vector>

#include "casimir/types.hpp"

namespace casimir {

/// One violated CavitySpec invariant.
struct Violation {
  std::string field;
  std::string reason;
};

/// All invariant violations of `spec`, empty when it is valid.
std::vector<Violation> violations(const CavitySpec& spec);

/// Throws InvalidCavity naming the first violated field; the message lists all of them.
void validate(const CavitySpec& spec);

/// Point M1 at arc coordinate r on the upper wing.
WingPoint wing_point(const CavitySpec& spec, double r);

/// Angles from the generatrix to the rays reaching the far end M2 (theta1)
/// and the near end M3 (theta2) of the lower wing.
AngleWindow limit_angles(const CavitySpec& spec, double r);

/// Perpendicular ray scale s with b(theta) = s / sin(theta - 2 phi).
double s_factor(const CavitySpec& spec, double r);
double s_factor(const CavitySpec& spec, double r, const AngleWindow& window);

/// Distance from the wing point at r to the lower wing along direction theta.
double ray_length(const CavitySpec& spec, double r, double theta);

}  // namespace casimir
