#include "casimir/types.hpp"

namespace casimir {

std::string_view to_string(Units units) { return units == Units::SI ? "si" : "reduced"; }

std::optional<Units> parse_units(std::string_view text) {
  if (text == "si") return Units::SI;
  if (text == "reduced") return Units::Reduced;
  return std::nullopt;
}

}  // namespace casimir
