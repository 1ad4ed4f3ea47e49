// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/stability.hpp"

#include <cmath>

#include "semistab/generator.hpp"

namespace semistab {

namespace {

// Budget for the sampled part of the spectral bound inside classify; the
// closed-form family analysis supplies the tail, so this only needs to
// resolve the least damped low modes.
constexpr int kClassifyBudget = 256;

}  // namespace

std::string to_string(StabilityVerdict v) {
  switch (v) {
    case StabilityVerdict::NotStable: return "not_stable";
    case StabilityVerdict::StableOnly: return "stable";
    case StabilityVerdict::Semiuniform: return "semiuniform";
    case StabilityVerdict::Exponential: return "exponential";
    case StabilityVerdict::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<double> DecayRates::lower_exponent() const {
  if (!alpha) return {};
  return -1.0 / (2.0 * *alpha);
}

std::optional<double> DecayRates::upper_exponent() const {
  if (!beta) return {};
  return -1.0 / (2.0 * *beta);
}

StabilityReport classify(const DampingFunction& f, const SpectrumSpec& spec) {
  StabilityReport report;

  const ZeroSetReport zs = zero_set(spec, f);
  const DampingExtremes ex = extremes(f, spec);

  auto& cond = report.conditions;
  if (ex.inf_f.exact) {
    cond.inf_f_positive = tristate_of(ex.inf_f.value > 0.0);
  } else if (!zs.is_empty) {
    cond.inf_f_positive = Tristate::False;  // a witnessed zero settles it
  } else {
    cond.inf_f_positive = Tristate::Unknown;
  }
  cond.sup_ratio_finite = ex.sup_f_over_s.exact
                              ? tristate_of(std::isfinite(ex.sup_f_over_s.value))
                              : Tristate::Unknown;
  if (zs.exact) {
    cond.zero_set_empty = tristate_of(zs.is_empty);
  } else {
    cond.zero_set_empty = zs.is_empty ? Tristate::Unknown : Tristate::False;
  }
  cond.zero_set_countable = zs.countable;
  cond.zero_set_null_measure = !zs.has_positive_measure;

  const GeneratorPortrait port = portrait(f, spec, kClassifyBudget);
  report.spectral_bound = port.spectral_bound;
  report.spectral_bound_exact = port.spectral_bound_exact;

  auto reason = [&](const char* condition, const char* criterion) {
    report.reasons.emplace_back(condition, criterion);
  };

  if (zs.has_positive_measure == Tristate::True) {
    report.verdict = StabilityVerdict::NotStable;
    reason("zero-set carries a nonnull spectral projection",
           "constant-energy solutions exist");
  } else if (cond.inf_f_positive == Tristate::True &&
             cond.sup_ratio_finite == Tristate::True) {
    report.verdict = StabilityVerdict::Exponential;
    reason("inf f > 0 and sup f/s < inf", "exponential stability criterion");
    if (spec.bounded())
      reason("bounded spectrum", "semiuniform and exponential stability coincide");
  } else if (cond.zero_set_empty == Tristate::True &&
             cond.sup_ratio_finite == Tristate::True) {
    report.verdict = StabilityVerdict::Semiuniform;
    reason("empty zero-set and sup f/s < inf",
           "spectral criterion on the imaginary axis (Batty)");
    if (cond.inf_f_positive == Tristate::False)
      reason("inf f = 0", "exponential stability fails");
    const RateExponents rates = rate_exponents(f, spec);
    if (rates.alpha || rates.beta) {
      DecayRates dr;
      if (rates.alpha) dr.alpha = rates.alpha->value;
      if (rates.beta) dr.beta = rates.beta->value;
      dr.exact = (!rates.alpha || rates.alpha->exact) && (!rates.beta || rates.beta->exact);
      dr.optimal = rates.alpha && rates.beta && rates.alpha->value == rates.beta->value;
      report.rates = dr;
      reason("inf s^alpha f > 0 and sup s^beta f < inf",
             "polynomial decay bounds (Borichev-Tomilov)");
    }
  } else if (cond.zero_set_null_measure == Tristate::True &&
             cond.zero_set_countable == Tristate::True) {
    report.verdict = StabilityVerdict::StableOnly;
    reason("zero-set has null spectral measure and is at most countable",
           "countable imaginary spectrum (Arendt-Batty-Lyubich-Vu)");
    if (cond.sup_ratio_finite == Tristate::False)
      reason("sup f/s = inf", "generator not bijective; semiuniform stability fails");
  } else {
    report.verdict = StabilityVerdict::Unknown;
    reason("conditions not certified by closed-form analysis",
           "verdict withheld rather than guessed");
  }

  reason("spectral bound", "sigma* <= omega* <= 0");
  return report;
}

std::vector<ClassificationRow> classification_table(const ModelBuilder& builder,
                                                    const std::vector<double>& grid) {
  std::vector<ClassificationRow> rows;
  rows.reserve(grid.size());
  for (double p : grid) {
    auto [spec, f] = builder(p);
    rows.push_back({p, classify(f, spec)});
  }
  return rows;
}

}  // namespace semistab
