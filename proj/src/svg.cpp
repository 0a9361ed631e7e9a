#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>

#include "casimir/error.hpp"
#include "casimir/io.hpp"

namespace casimir::io {
namespace {

constexpr double kMarginLeft = 90.0;
constexpr double kMarginRight = 20.0;
constexpr double kMarginTop = 20.0;
constexpr double kMarginBottom = 50.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string pixel(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void pad() {
    if (hi > lo) return;
    const double half = lo == 0.0 ? 1.0 : 0.5 * std::abs(lo);
    lo -= half;
    hi += half;
  }
};

}  // namespace

void check_plot(const PlotSpec& plot) {
  if (plot.series.empty()) throw Error(ErrorKind::InvalidArgument, "series", "plot needs at least one series");
  for (const auto& s : plot.series) {
    if (s.points.size() < 2)
      throw Error(ErrorKind::InvalidArgument, "series", "series '" + s.name + "' needs at least two points");
    for (const auto& [x, y] : s.points)
      if (!std::isfinite(x) || !std::isfinite(y))
        throw Error(ErrorKind::InvalidArgument, "series", "series '" + s.name + "' has a non-finite point");
  }
  if (plot.reference_y && !std::isfinite(*plot.reference_y))
    throw Error(ErrorKind::InvalidArgument, "reference_y", "reference level must be finite");
  if (plot.width <= kMarginLeft + kMarginRight || plot.height <= kMarginTop + kMarginBottom)
    throw Error(ErrorKind::InvalidArgument, "size", "plot is too small");
}

std::string emit_svg(const PlotSpec& plot) {
  check_plot(plot);
  Range xr, yr;
  for (const auto& s : plot.series)
    for (const auto& [x, y] : s.points) {
      xr.add(x);
      yr.add(y);
    }
  if (plot.reference_y) yr.add(*plot.reference_y);
  xr.pad();
  yr.pad();

  const double left = kMarginLeft;
  const double right = plot.width - kMarginRight;
  const double top = kMarginTop;
  const double bottom = plot.height - kMarginBottom;
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * (right - left); };
  auto py = [&](double y) { return bottom - (y - yr.lo) / (yr.hi - yr.lo) * (bottom - top); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(plot.width) + "\" height=\"" +
         std::to_string(plot.height) + "\" viewBox=\"0 0 " + std::to_string(plot.width) + ' ' +
         std::to_string(plot.height) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes box with min/max tick labels.
  out += "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  out += "<line x1=\"" + pixel(left) + "\" y1=\"" + pixel(bottom) + "\" x2=\"" + pixel(right) + "\" y2=\"" +
         pixel(bottom) + "\"/>\n";
  out += "<line x1=\"" + pixel(left) + "\" y1=\"" + pixel(top) + "\" x2=\"" + pixel(left) + "\" y2=\"" +
         pixel(bottom) + "\"/>\n";
  out += "</g>\n";
  out += "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  out += "<text x=\"" + pixel(left) + "\" y=\"" + pixel(bottom + 15) + "\" text-anchor=\"start\">" + tick(xr.lo) +
         "</text>\n";
  out += "<text x=\"" + pixel(right) + "\" y=\"" + pixel(bottom + 15) + "\" text-anchor=\"end\">" + tick(xr.hi) +
         "</text>\n";
  out += "<text x=\"" + pixel(left - 5) + "\" y=\"" + pixel(bottom) + "\" text-anchor=\"end\">" + tick(yr.lo) +
         "</text>\n";
  out += "<text x=\"" + pixel(left - 5) + "\" y=\"" + pixel(top + 10) + "\" text-anchor=\"end\">" + tick(yr.hi) +
         "</text>\n";
  out += "<text x=\"" + pixel(0.5 * (left + right)) + "\" y=\"" + pixel(plot.height - 10.0) +
         "\" text-anchor=\"middle\">" + escape(plot.x_label) + "</text>\n";
  out += "<text x=\"15\" y=\"" + pixel(0.5 * (top + bottom)) + "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
         pixel(0.5 * (top + bottom)) + ")\">" + escape(plot.y_label) + "</text>\n";
  out += "</g>\n";

  std::size_t color = 0;
  for (const auto& s : plot.series) {
    out += "<polyline class=\"series\" fill=\"none\" stroke-width=\"1.5\" stroke=\"" +
           std::string(kPalette[color++ % std::size(kPalette)]) + "\" data-name=\"" + escape(s.name) + "\" points=\"";
    bool first = true;
    for (const auto& [x, y] : s.points) {
      if (!first) out += ' ';
      out += pixel(px(x)) + ',' + pixel(py(y));
      first = false;
    }
    out += "\"/>\n";
  }
  if (plot.reference_y) {
    const std::string y = pixel(py(*plot.reference_y));
    out += "<polyline class=\"reference\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"6 4\" data-name=\"" +
           escape(plot.reference_label) + "\" points=\"" + pixel(left) + ',' + y + ' ' + pixel(right) + ',' + y +
           "\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Usage, "out", "cannot open " + tmp.string() + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error(ErrorKind::Usage, "out", "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error(ErrorKind::Usage, "out", "cannot move output into place at " + path);
  }
}

}  // namespace casimir::io
