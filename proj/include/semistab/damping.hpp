// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semistab/errors.hpp"
#include "semistab/spectrum.hpp"
#include "semistab/tristate.hpp"

namespace semistab {

enum class DampingFamily { Zero, Constant, Power, RotationalInertia, Tabulated };

/// Asymptotic tail of a tabulated damping: f(s) = c s^p for s beyond the
/// last knot. Required for any conclusion over an unbounded spectrum.
struct DampingTail {
  double p = 0.0;
  double c = 1.0;
};

/// Nonnegative continuous damping function on the spectrum. Parametric
/// families are evaluated in closed form; tabulated data is interpolated
/// piecewise-linearly between knots.
///
/// RotationalInertia is f(s) = s ((omega s + sqrt(omega^2 s^2 + 4 s))/2)^(theta-2),
/// the damping produced by a fractional dissipation term of exponent theta
/// in a plate model with rotational inertia omega.
class DampingFunction {
public:
  static DampingFunction zero();
  static DampingFunction constant(double c);
  static DampingFunction power(double theta);
  static DampingFunction rotational_inertia(double theta, double omega);
  static DampingFunction tabulated(std::vector<std::pair<double, double>> knots,
                                   std::optional<DampingTail> tail = {});

  DampingFamily family() const { return family_; }
  double theta() const { return theta_; }
  double omega() const { return omega_; }
  double constant_value() const { return c_; }
  const std::vector<std::pair<double, double>>& knots() const { return knots_; }
  const std::optional<DampingTail>& tail() const { return tail_; }

  double operator()(double s) const;

  /// True when eval is defined at s (tabulated data has a finite range).
  bool defined_at(double s) const;

  std::string describe() const;

private:
  DampingFunction() = default;

  DampingFamily family_ = DampingFamily::Zero;
  double theta_ = 0.0;
  double omega_ = 1.0;
  double c_ = 0.0;
  std::vector<std::pair<double, double>> knots_;
  std::optional<DampingTail> tail_;
};

/// A scalar bound together with its provenance: closed-form (`exact`) or a
/// sampled one-sided estimate. Values may be +infinity.
struct BoundValue {
  double value = 0.0;
  bool exact = false;
};

/// The three extremal quantities every stability criterion consumes.
struct DampingExtremes {
  BoundValue inf_f;
  BoundValue sup_f_over_s;
  BoundValue sup_f_over_sqrt_s;
};

DampingExtremes extremes(const DampingFunction& f, const SpectrumSpec& spec,
                         int budget = 256);

/// Polynomial weight exponents: alpha is the least a with inf s^a f(s) > 0,
/// beta the greatest b with sup s^b f(s) < inf. Absent when no polynomial
/// weight is needed (inf f > 0) or when nothing can be certified.
struct RateExponents {
  std::optional<BoundValue> alpha;
  std::optional<BoundValue> beta;
};

RateExponents rate_exponents(const DampingFunction& f, const SpectrumSpec& spec);

/// Limit points of f(s)/s along spectrum sequences escaping to infinity.
/// `certified` is false when tabulated data lacks tail metadata, in which
/// case the (empty) result must not be trusted.
struct RatioLimitSet {
  std::vector<double> values;
  bool certified = true;
};

RatioLimitSet ratio_limit_points(const DampingFunction& f, const SpectrumSpec& spec);

}  // namespace semistab
