#include <array>
#include <charconv>

#include "casimir/io.hpp"

namespace casimir::io {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return ec == std::errc{} ? std::string(buf.data(), end) : std::string("nan");
}

std::string emit_csv(const PressureProfile& profile) {
  std::string out = "r,p_x,p_z\n";
  for (const auto& s : profile.samples)
    out += format_number(s.r) + ',' + format_number(s.p_x) + ',' + format_number(s.p_z) + '\n';
  return out;
}

std::string emit_csv(const SweepTable& table) {
  std::string out = "param,f_x,f_z,err_x,err_z,converged\n";
  for (const auto& row : table.rows) {
    out += format_number(row.param);
    if (row.result) {
      const ForceResult& f = *row.result;
      out += ',' + format_number(f.f_x) + ',' + format_number(f.f_z) + ',' + format_number(f.err_x) + ',' +
             format_number(f.err_z) + ',' + (f.converged ? "true" : "false");
    } else {
      out += ",nan,nan,nan,nan,false";
    }
    out += '\n';
  }
  return out;
}

}  // namespace casimir::io
