// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "semistab/errors.hpp"
#include "semistab/tristate.hpp"

namespace semistab {

class DampingFunction;

/// Closed-form tail of a discrete eigenvalue sequence.
enum class TailForm {
  Square,              // n^2
  Fourth,              // n^4
  RotationalQuotient,  // n^4 / (1 + omega n^2)
  PowerLaw,            // c n^p
};

struct TailFormula {
  TailForm form = TailForm::Square;
  double omega = 1.0;  // RotationalQuotient only
  double c = 1.0;      // PowerLaw only
  double p = 2.0;      // PowerLaw only
  int start_index = 1;

  double eigenvalue(int n) const;  // n >= start_index
};

/// Closed subinterval of (0, inf); `hi` is ignored when `unbounded`.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool unbounded = false;

  bool contains(double s, double tol = 0.0) const;
};

enum class SpectrumKind { Discrete, Continuous };

/// Description of the spectrum of the elastic operator: either a discrete
/// eigenvalue sequence (an explicit head, optionally continued by a closed
/// -form tail) or a finite union of closed intervals, at most one unbounded.
/// Immutable after construction; all points are strictly positive.
class SpectrumSpec {
public:
  static SpectrumSpec discrete(std::vector<double> eigenvalues,
                               std::optional<TailFormula> tail = {});
  static SpectrumSpec continuous(std::vector<Interval> intervals);

  SpectrumKind kind() const { return kind_; }
  double s0() const { return s0_; }
  bool bounded() const { return bounded_; }

  /// Largest point (only meaningful when bounded()).
  double s_max() const;

  const std::vector<double>& head() const { return head_; }
  const std::optional<TailFormula>& tail() const { return tail_; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  /// n-th eigenvalue of a discrete spectrum, 0-based across head + tail.
  double eigenvalue(int n) const;

  /// Number of eigenvalues (discrete, bounded only).
  int eigenvalue_count() const;

  bool contains(double s, double tol = 0.0) const;

private:
  SpectrumSpec() = default;

  SpectrumKind kind_ = SpectrumKind::Discrete;
  double s0_ = 0.0;
  bool bounded_ = true;
  std::vector<double> head_;
  std::optional<TailFormula> tail_;
  std::vector<Interval> intervals_;
};

struct SamplingPolicy {
  /// Upper cut applied to unbounded intervals of continuous spectra.
  double unbounded_cap = 1e4;
};

/// Finite sample of the spectrum: the first `budget` eigenvalues for
/// discrete spectra; a log-spaced grid per interval (endpoints included,
/// the unbounded interval cut at the policy cap) for continuous ones.
/// Output is sorted ascending and never exceeds `budget` points.
std::vector<double> sample_modes(const SpectrumSpec& spec, int budget,
                                 const SamplingPolicy& policy = {});

/// Zero-set of the damping over the spectrum. `exact` distinguishes
/// closed-form family analysis from sampled evidence.
struct ZeroSetReport {
  std::vector<double> points;             // representative zeros (sorted)
  std::vector<Interval> zero_intervals;   // zero subintervals (continuous only)
  bool whole_spectrum = false;            // the damping vanishes identically
  bool is_empty = true;
  Tristate countable = Tristate::True;
  Tristate has_positive_measure = Tristate::False;
  bool exact = true;

  bool contains(double s, double tol = 1e-12) const;
};

ZeroSetReport zero_set(const SpectrumSpec& spec, const DampingFunction& f,
                       double tol = 1e-12);

}  // namespace semistab
