#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "casimir/error.hpp"

namespace casimir {

struct QuadratureOptions {
  double rel_tol = 1e-9;
  double abs_tol = 1e-300;
  int max_depth = 50;
  int max_panels = 20000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
  bool converged = true;

  static constexpr std::string_view method = "gauss-kronrod-15-global-adaptive";
};

/// Sum in a fixed binary tree so the result depends only on element order.
inline double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace detail {

// Kronrod 15-point abscissae and weights with the embedded Gauss 7-point weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double lo;
  double hi;
  double value;
  double error;
  int depth;
};

[[noreturn]] inline void non_finite(double x) {
  std::ostringstream msg;
  msg.precision(17);
  msg << "integrand is not finite at x = " << x;
  throw Error(ErrorKind::NonFiniteSample, "x", msg.str());
}

template <class F>
double sample(F& f, double x) {
  const double y = f(x);
  if (!std::isfinite(y)) non_finite(x);
  return y;
}

template <class F>
Panel gauss_kronrod(F& f, double lo, double hi, int depth) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = sample(f, center);
  double kronrod = kKronrodWeights[7] * fc;
  double gauss = kGaussWeights[3] * fc;
  double magnitude = kKronrodWeights[7] * std::abs(fc);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    const double left = sample(f, center - dx);
    const double right = sample(f, center + dx);
    kronrod += kKronrodWeights[j] * (left + right);
    magnitude += kKronrodWeights[j] * (std::abs(left) + std::abs(right));
    if (j % 2 == 1) gauss += kGaussWeights[j / 2] * (left + right);
  }
  // |K15 - G7| bounds the Gauss error; the floor accounts for roundoff in the sum.
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * magnitude * std::abs(half);
  return {lo, hi, kronrod * half, std::max(std::abs((kronrod - gauss) * half), roundoff), depth};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod integration: the panel with the largest
/// error estimate is bisected until the summed estimate meets
/// max(rel_tol |value|, abs_tol). Panels deeper than max_depth are not split;
/// the best value is returned with converged = false in that case.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double lo, double hi, const QuadratureOptions& opts = {}) {
  if (!(lo <= hi)) throw Error(ErrorKind::InvalidArgument, "lo", "integration bounds must satisfy lo <= hi");
  if (!(opts.rel_tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "rel_tol", "rel_tol must be positive");
  if (lo == hi) return {};

  std::vector<detail::Panel> panels{detail::gauss_kronrod(f, lo, hi, 0)};
  // Max-heap of (error, panel index); ties resolve towards the larger index.
  std::priority_queue<std::pair<double, std::size_t>> worst;
  worst.emplace(panels.front().error, 0);
  int evaluations = 15;
  double value = panels.front().value;
  double error = panels.front().error;
  bool converged = true;

  while (error > std::max(opts.rel_tol * std::abs(value), opts.abs_tol)) {
    const std::size_t index = worst.top().second;
    const detail::Panel parent = panels[index];
    if (parent.depth >= opts.max_depth || static_cast<int>(panels.size()) >= opts.max_panels) {
      converged = false;
      break;
    }
    worst.pop();
    const double mid = 0.5 * (parent.lo + parent.hi);
    panels[index] = detail::gauss_kronrod(f, parent.lo, mid, parent.depth + 1);
    panels.push_back(detail::gauss_kronrod(f, mid, parent.hi, parent.depth + 1));
    worst.emplace(panels[index].error, index);
    worst.emplace(panels.back().error, panels.size() - 1);
    evaluations += 30;
    value += panels[index].value + panels.back().value - parent.value;
    error += panels[index].error + panels.back().error - parent.error;
  }

  std::sort(panels.begin(), panels.end(), [](const auto& l, const auto& r) { return l.lo < r.lo; });
  std::vector<double> values(panels.size());
  std::vector<double> errors(panels.size());
  for (std::size_t i = 0; i < panels.size(); ++i) {
    values[i] = panels[i].value;
    errors[i] = panels[i].error;
  }
  QuadratureResult result{pairwise_sum(values), pairwise_sum(errors), evaluations, converged};
  if (converged && result.error_estimate > std::max(opts.rel_tol * std::abs(result.value), opts.abs_tol))
    result.converged = false;
  return result;
}

/// Midpoint rule on n uniform panels with pairwise summation.
template <class F>
double integrate_fixed(F&& f, double lo, double hi, int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n", "panel count must be at least 1");
  const double h = (hi - lo) / n;
  std::vector<double> samples(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) samples[i] = detail::sample(f, lo + (i + 0.5) * h);
  return pairwise_sum(samples) * h;
}

}  // namespace casimir
