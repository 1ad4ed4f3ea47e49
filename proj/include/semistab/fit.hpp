// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

namespace semistab {

/// Least-squares line through (log x, log y); slope is the power-law
/// exponent, residual the RMS misfit in log space.
struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual_rms = 0.0;
  std::size_t point_count = 0;
};

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Indices of strict local maxima (plateau-tolerant on the right side).
std::vector<std::size_t> local_maxima(const std::vector<double>& y);

}  // namespace semistab
