// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semistab/damping.hpp"
#include "semistab/spectrum.hpp"
#include "semistab/tristate.hpp"

namespace semistab {

/// Stability classes, ordered from weakest to strongest. A report stores
/// the strongest class that can be certified.
enum class StabilityVerdict { NotStable, StableOnly, Semiuniform, Exponential, Unknown };

std::string to_string(StabilityVerdict v);

struct StabilityConditions {
  Tristate inf_f_positive = Tristate::Unknown;
  Tristate sup_ratio_finite = Tristate::Unknown;
  Tristate zero_set_empty = Tristate::Unknown;
  Tristate zero_set_countable = Tristate::Unknown;
  Tristate zero_set_null_measure = Tristate::Unknown;
};

/// Optimal-rate data for semiuniform decay: the gauge psi(t) decays at
/// least like t^(-1/(2 alpha)) and at most like t^(-1/(2 beta)).
struct DecayRates {
  std::optional<double> alpha;
  std::optional<double> beta;
  bool exact = false;
  bool optimal = false;  // alpha == beta

  std::optional<double> lower_exponent() const;  // -1/(2 alpha)
  std::optional<double> upper_exponent() const;  // -1/(2 beta)
};

struct StabilityReport {
  StabilityVerdict verdict = StabilityVerdict::Unknown;
  StabilityConditions conditions;
  std::optional<DecayRates> rates;
  double spectral_bound = 0.0;
  bool spectral_bound_exact = false;
  std::vector<std::pair<std::string, std::string>> reasons;  // (condition, criterion)
};

/// Classification ladder:
///   zero-set with nonnull spectral projection            -> NotStable
///   inf f > 0 and sup f/s < inf                          -> Exponential
///   empty zero-set and sup f/s < inf                     -> Semiuniform
///   null-measure, at most countable zero-set             -> StableOnly
///   anything uncertified                                 -> Unknown
StabilityReport classify(const DampingFunction& f, const SpectrumSpec& spec);

struct ClassificationRow {
  double parameter = 0.0;
  StabilityReport report;
};

using ModelBuilder = std::function<std::pair<SpectrumSpec, DampingFunction>(double)>;

std::vector<ClassificationRow> classification_table(const ModelBuilder& builder,
                                                    const std::vector<double>& grid);

}  // namespace semistab
