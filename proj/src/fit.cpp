// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/fit.hpp"

#include <cmath>

#include "semistab/errors.hpp"

namespace semistab {

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw InvalidParameter("fit inputs must have equal length");
  if (x.size() < 2) throw InsufficientRange("fit needs at least two points");

  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0))
      throw InvalidParameter("log-log fit needs positive data");
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw InsufficientRange("fit abscissae are degenerate");

  LogLogFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.point_count = n;

  double rss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::log(y[i]) - (fit.intercept + fit.slope * std::log(x[i]));
    rss += r * r;
  }
  fit.residual_rms = std::sqrt(rss / n);
  return fit;
}

std::vector<std::size_t> local_maxima(const std::vector<double>& y) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 1; i + 1 < y.size(); ++i)
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) idx.push_back(i);
  return idx;
}

}  // namespace semistab
