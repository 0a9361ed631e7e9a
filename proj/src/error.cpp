#include "casimir/error.hpp"

namespace casimir {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidCavity: return "InvalidCavity";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegenerateFan: return "DegenerateFan";
    case ErrorKind::NumericDomain: return "NumericDomain";
    case ErrorKind::NumericDegeneracy: return "NumericDegeneracy";
    case ErrorKind::NonPositiveGap: return "NonPositiveGap";
    case ErrorKind::NonPositiveRay: return "NonPositiveRay";
    case ErrorKind::NotConverged: return "NotConverged";
    case ErrorKind::NonFiniteSample: return "NonFiniteSample";
    case ErrorKind::NoInteriorMaximum: return "NoInteriorMaximum";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace casimir
