// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/damping.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <vector>

namespace semistab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// lambda(s): the positive solution of lambda^2 / (1 + omega lambda) = s,
// i.e. the eigenvalue of the underlying second-order operator producing the
// spectrum point s of the rotational-inertia model.
double lambda_of_s(double s, double omega) {
  return (omega * s + std::sqrt(omega * omega * s * s + 4.0 * s)) / 2.0;
}

// Extremum of C s^e over the spectrum (monotone in s, so endpoints decide).
BoundValue power_extremum(double C, double e, const SpectrumSpec& spec, bool want_sup) {
  if (C == 0.0) return {0.0, true};
  const double lo = spec.s0();
  if (e == 0.0) return {C, true};
  if (spec.bounded()) {
    const double a = C * std::pow(lo, e);
    const double b = C * std::pow(spec.s_max(), e);
    return {want_sup ? std::max(a, b) : std::min(a, b), true};
  }
  if (e > 0.0) return {want_sup ? kInf : C * std::pow(lo, e), true};
  return {want_sup ? C * std::pow(lo, e) : 0.0, true};
}

// Extremum of h over the lambda-image [lam0, lam_max] of the spectrum,
// where h is unimodal with at most one interior critical point and known
// limit at infinity. Candidates: endpoints, the critical point if inside,
// and the limit when the range is unbounded.
struct UnimodalSpec {
  double lam0 = 0.0;
  double lam_max = kInf;  // inf for unbounded spectra
  std::optional<double> critical;
  std::optional<double> limit_at_infinity;  // required when lam_max = inf
};

BoundValue unimodal_extremum(const UnimodalSpec& u, const std::function<double(double)>& h,
                             bool want_sup) {
  std::vector<double> values;
  values.push_back(h(u.lam0));
  if (std::isfinite(u.lam_max)) {
    values.push_back(h(u.lam_max));
  } else {
    values.push_back(u.limit_at_infinity.value());
  }
  if (u.critical && *u.critical > u.lam0 &&
      (!std::isfinite(u.lam_max) || *u.critical < u.lam_max)) {
    values.push_back(h(*u.critical));
  }
  const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  return {want_sup ? *mx : *mn, true};
}

}  // namespace

DampingFunction DampingFunction::zero() {
  DampingFunction f;
  f.family_ = DampingFamily::Zero;
  return f;
}

DampingFunction DampingFunction::constant(double c) {
  if (c < 0.0) throw InvalidParameter("constant damping must be >= 0");
  DampingFunction f;
  f.family_ = DampingFamily::Constant;
  f.c_ = c;
  return f;
}

DampingFunction DampingFunction::power(double theta) {
  DampingFunction f;
  f.family_ = DampingFamily::Power;
  f.theta_ = theta;
  return f;
}

DampingFunction DampingFunction::rotational_inertia(double theta, double omega) {
  if (!(omega > 0.0)) throw InvalidParameter("rotational inertia requires omega > 0");
  DampingFunction f;
  f.family_ = DampingFamily::RotationalInertia;
  f.theta_ = theta;
  f.omega_ = omega;
  return f;
}

DampingFunction DampingFunction::tabulated(std::vector<std::pair<double, double>> knots,
                                           std::optional<DampingTail> tail) {
  if (knots.size() < 2) throw InvalidParameter("tabulated damping needs at least two knots");
  std::sort(knots.begin(), knots.end());
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (!(knots[i].first > 0.0)) throw NonPositivePoint("knot abscissae must be positive");
    if (knots[i].second < 0.0) throw InvalidParameter("damping values must be >= 0");
    if (i > 0 && knots[i].first == knots[i - 1].first)
      throw InvalidParameter("duplicate knot abscissa");
  }
  if (tail && tail->c < 0.0) throw InvalidParameter("tail coefficient must be >= 0");
  DampingFunction f;
  f.family_ = DampingFamily::Tabulated;
  f.knots_ = std::move(knots);
  f.tail_ = tail;
  return f;
}

double DampingFunction::operator()(double s) const {
  if (!(s > 0.0)) throw InvalidParameter("damping evaluated at a nonpositive point");
  switch (family_) {
    case DampingFamily::Zero:
      return 0.0;
    case DampingFamily::Constant:
      return c_;
    case DampingFamily::Power:
      return std::pow(s, theta_);
    case DampingFamily::RotationalInertia: {
      const double lam = lambda_of_s(s, omega_);
      return s * std::pow(lam, theta_ - 2.0);
    }
    case DampingFamily::Tabulated: {
      if (s < knots_.front().first)
        throw OutOfRange("point below the tabulated damping range");
      if (s > knots_.back().first) {
        if (!tail_) throw OutOfRange("point beyond the tabulated damping range");
        return tail_->c * std::pow(s, tail_->p);
      }
      auto it = std::lower_bound(knots_.begin(), knots_.end(), s,
                                 [](const auto& k, double x) { return k.first < x; });
      if (it->first == s) return it->second;
      const auto& [x1, y1] = *it;
      const auto& [x0, y0] = *std::prev(it);
      const double t = (s - x0) / (x1 - x0);
      return y0 + t * (y1 - y0);
    }
  }
  return 0.0;
}

bool DampingFunction::defined_at(double s) const {
  if (!(s > 0.0)) return false;
  if (family_ != DampingFamily::Tabulated) return true;
  if (s < knots_.front().first) return false;
  return s <= knots_.back().first || tail_.has_value();
}

std::string DampingFunction::describe() const {
  std::ostringstream os;
  switch (family_) {
    case DampingFamily::Zero: os << "zero"; break;
    case DampingFamily::Constant: os << "constant c=" << c_; break;
    case DampingFamily::Power: os << "power theta=" << theta_; break;
    case DampingFamily::RotationalInertia:
      os << "rotational-inertia theta=" << theta_ << " omega=" << omega_;
      break;
    case DampingFamily::Tabulated:
      os << "tabulated (" << knots_.size() << " knots";
      if (tail_) os << ", tail " << tail_->c << " s^" << tail_->p;
      os << ")";
      break;
  }
  return os.str();
}

namespace {

// Lambda-space ranges covered by the spectrum. Continuous spectra are
// walked interval by interval so a unimodal peak falling in a gap is never
// charged; discrete spectra with a tail use the closed hull [lambda0, inf)
// (suprema over the hull and over the eigenvalue set agree wherever the
// stability criteria consume them: the finite/infinite dichotomy and every
// monotone case).
std::vector<std::pair<double, double>> lambda_ranges(const SpectrumSpec& spec,
                                                     double omega) {
  std::vector<std::pair<double, double>> ranges;
  if (spec.kind() == SpectrumKind::Continuous) {
    for (const auto& iv : spec.intervals())
      ranges.emplace_back(lambda_of_s(iv.lo, omega),
                          iv.unbounded ? kInf : lambda_of_s(iv.hi, omega));
  } else {
    ranges.emplace_back(lambda_of_s(spec.s0(), omega),
                        spec.bounded() ? lambda_of_s(spec.s_max(), omega) : kInf);
  }
  return ranges;
}

BoundValue unimodal_over_ranges(const std::vector<std::pair<double, double>>& ranges,
                                const std::optional<double>& critical,
                                double limit_at_infinity,
                                const std::function<double(double)>& h, bool want_sup) {
  BoundValue out{want_sup ? -kInf : kInf, true};
  for (const auto& [lo, hi] : ranges) {
    UnimodalSpec u{lo, hi, critical, limit_at_infinity};
    const BoundValue b = unimodal_extremum(u, h, want_sup);
    out.value = want_sup ? std::max(out.value, b.value) : std::min(out.value, b.value);
  }
  return out;
}

DampingExtremes extremes_rotational(const DampingFunction& f, const SpectrumSpec& spec) {
  const double theta = f.theta();
  const double omega = f.omega();
  const auto ranges = lambda_ranges(spec, omega);
  const double lam0 = ranges.front().first;

  DampingExtremes ex;

  // f as a function of lambda: lambda^theta / (1 + omega lambda); one
  // interior maximum for theta in (0,1), otherwise monotone.
  {
    std::optional<double> critical;
    if (theta > 0.0 && theta < 1.0) critical = theta / (omega * (1.0 - theta));
    const double limit = theta < 1.0 ? 0.0 : theta == 1.0 ? 1.0 / omega : kInf;
    ex.inf_f = unimodal_over_ranges(
        ranges, critical, limit,
        [&](double l) { return std::pow(l, theta) / (1.0 + omega * l); }, false);
  }

  // f(s)/s = lambda^(theta-2), monotone in lambda.
  {
    const double e = theta - 2.0;
    if (e == 0.0) {
      ex.sup_f_over_s = {1.0, true};
    } else if (spec.bounded()) {
      const double lam_max = ranges.back().second;
      ex.sup_f_over_s = {std::max(std::pow(lam0, e), std::pow(lam_max, e)), true};
    } else {
      ex.sup_f_over_s = {e > 0.0 ? kInf : std::pow(lam0, e), true};
    }
  }

  // f(s)/sqrt(s) = lambda^(theta-1) (1 + omega lambda)^(-1/2); decreasing
  // for theta <= 1, one interior maximum for theta in (1, 3/2), increasing
  // to the limit omega^(-1/2) at theta = 3/2, unbounded beyond.
  {
    std::optional<double> critical;
    if (theta > 1.0 && theta < 1.5)
      critical = 2.0 * (theta - 1.0) / (omega * (3.0 - 2.0 * theta));
    const double limit = theta < 1.5    ? 0.0
                         : theta == 1.5 ? 1.0 / std::sqrt(omega)
                                        : kInf;
    ex.sup_f_over_sqrt_s = unimodal_over_ranges(
        ranges, critical, limit,
        [&](double l) { return std::pow(l, theta - 1.0) / std::sqrt(1.0 + omega * l); },
        true);
  }
  return ex;
}

struct TabulatedScan {
  double inf_f = kInf;
  double sup_f_over_s = 0.0;
  double sup_f_over_sqrt_s = 0.0;
  bool any = false;
  bool covered = true;  // every spectrum point was evaluated
};

// Exact extremes of the piecewise-linear part over one spectrum interval.
// On a segment f(s) = A + B s: f and f/s are monotone, f/sqrt(s) may have
// one interior critical point at s = A/B.
void scan_segment(double x0, double y0, double x1, double y1, double lo, double hi,
                  TabulatedScan& scan) {
  const double a = std::max(x0, lo);
  const double b = std::min(x1, hi);
  if (a > b) return;
  const double B = (y1 - y0) / (x1 - x0);
  const double A = y0 - B * x0;
  auto visit = [&](double s) {
    const double fs = A + B * s;
    scan.any = true;
    scan.inf_f = std::min(scan.inf_f, fs);
    scan.sup_f_over_s = std::max(scan.sup_f_over_s, fs / s);
    scan.sup_f_over_sqrt_s = std::max(scan.sup_f_over_sqrt_s, fs / std::sqrt(s));
  };
  visit(a);
  if (b > a) visit(b);
  if (B != 0.0) {
    const double crit = A / B;
    if (crit > a && crit < b) visit(crit);
  }
}

DampingExtremes extremes_tabulated(const DampingFunction& f, const SpectrumSpec& spec,
                                   int budget) {
  const auto& knots = f.knots();
  const double k_lo = knots.front().first;
  const double k_hi = knots.back().first;
  TabulatedScan scan;
  scan.covered = spec.s0() >= k_lo;

  bool beyond = false;      // spectrum points beyond the last knot exist
  double beyond_lo = k_hi;  // least such point

  if (spec.kind() == SpectrumKind::Discrete) {
    const int cap = std::max(budget, 100000);
    int n = 0;
    for (; n < cap; ++n) {
      if (!spec.tail() && n >= static_cast<int>(spec.head().size())) break;
      const double s = spec.eigenvalue(n);
      if (s > k_hi) {
        beyond = true;
        beyond_lo = s;
        break;
      }
      if (s < k_lo) {
        scan.covered = false;
        continue;
      }
      const double fs = f(s);
      scan.any = true;
      scan.inf_f = std::min(scan.inf_f, fs);
      scan.sup_f_over_s = std::max(scan.sup_f_over_s, fs / s);
      scan.sup_f_over_sqrt_s = std::max(scan.sup_f_over_sqrt_s, fs / std::sqrt(s));
    }
    if (n == cap) scan.covered = false;
  } else {
    for (const auto& iv : spec.intervals()) {
      const double hi = iv.unbounded ? k_hi : std::min(iv.hi, k_hi);
      for (std::size_t i = 0; i + 1 < knots.size(); ++i)
        scan_segment(knots[i].first, knots[i].second, knots[i + 1].first,
                     knots[i + 1].second, iv.lo, hi, scan);
      if (iv.unbounded || iv.hi > k_hi) {
        beyond = true;
        beyond_lo = std::min(beyond_lo, std::max(iv.lo, k_hi));
      }
    }
  }

  DampingExtremes ex;
  const bool exact = scan.covered && (!beyond || f.tail().has_value());
  double inf_f = scan.any ? scan.inf_f : kInf;
  double sup_ratio = scan.any ? scan.sup_f_over_s : 0.0;
  double sup_sqrt = scan.any ? scan.sup_f_over_sqrt_s : 0.0;

  if (beyond && f.tail()) {
    const double c = f.tail()->c;
    const double p = f.tail()->p;
    const bool unbounded_beyond = !spec.bounded();
    auto tail_extreme = [&](double e, bool want_sup) {
      if (c == 0.0) return 0.0;
      const double at_lo = c * std::pow(beyond_lo, e);
      if (unbounded_beyond) {
        if (e > 0.0) return want_sup ? kInf : at_lo;
        if (e == 0.0) return c;
        return want_sup ? at_lo : 0.0;
      }
      const double at_hi = c * std::pow(spec.s_max(), e);
      return want_sup ? std::max(at_lo, at_hi) : std::min(at_lo, at_hi);
    };
    inf_f = std::min(inf_f, tail_extreme(p, false));
    sup_ratio = std::max(sup_ratio, tail_extreme(p - 1.0, true));
    sup_sqrt = std::max(sup_sqrt, tail_extreme(p - 0.5, true));
  }
  if (!std::isfinite(inf_f)) inf_f = 0.0;  // nothing evaluable

  ex.inf_f = {inf_f, exact};
  ex.sup_f_over_s = {sup_ratio, exact};
  ex.sup_f_over_sqrt_s = {sup_sqrt, exact};
  return ex;
}

}  // namespace

DampingExtremes extremes(const DampingFunction& f, const SpectrumSpec& spec, int budget) {
  if (budget < 1) throw InvalidParameter("budget must be >= 1");

  // A finite eigenvalue list is enumerated outright: exact for every
  // family and immune to critical points falling between eigenvalues.
  if (spec.kind() == SpectrumKind::Discrete && spec.bounded() &&
      f.family() != DampingFamily::Tabulated) {
    DampingExtremes ex;
    ex.inf_f = {kInf, true};
    ex.sup_f_over_s = {0.0, true};
    ex.sup_f_over_sqrt_s = {0.0, true};
    for (double s : spec.head()) {
      const double fs = f(s);
      ex.inf_f.value = std::min(ex.inf_f.value, fs);
      ex.sup_f_over_s.value = std::max(ex.sup_f_over_s.value, fs / s);
      ex.sup_f_over_sqrt_s.value = std::max(ex.sup_f_over_sqrt_s.value, fs / std::sqrt(s));
    }
    return ex;
  }

  switch (f.family()) {
    case DampingFamily::Zero:
      return {{0.0, true}, {0.0, true}, {0.0, true}};
    case DampingFamily::Constant: {
      const double c = f.constant_value();
      DampingExtremes ex;
      ex.inf_f = {c, true};
      ex.sup_f_over_s = power_extremum(c, -1.0, spec, true);
      ex.sup_f_over_sqrt_s = power_extremum(c, -0.5, spec, true);
      return ex;
    }
    case DampingFamily::Power: {
      const double theta = f.theta();
      DampingExtremes ex;
      ex.inf_f = power_extremum(1.0, theta, spec, false);
      ex.sup_f_over_s = power_extremum(1.0, theta - 1.0, spec, true);
      ex.sup_f_over_sqrt_s = power_extremum(1.0, theta - 0.5, spec, true);
      return ex;
    }
    case DampingFamily::RotationalInertia:
      return extremes_rotational(f, spec);
    case DampingFamily::Tabulated:
      return extremes_tabulated(f, spec, budget);
  }
  return {};
}

RateExponents rate_exponents(const DampingFunction& f, const SpectrumSpec& spec) {
  RateExponents out;
  if (spec.bounded()) return out;

  switch (f.family()) {
    case DampingFamily::Zero:
    case DampingFamily::Constant:
      return out;
    case DampingFamily::Power:
      if (f.theta() < 0.0) {
        out.alpha = BoundValue{-f.theta(), true};
        out.beta = BoundValue{-f.theta(), true};
      }
      return out;
    case DampingFamily::RotationalInertia:
      // f(s) behaves like omega^(theta-2) s^(theta-1) at infinity.
      if (f.theta() < 1.0) {
        out.alpha = BoundValue{1.0 - f.theta(), true};
        out.beta = BoundValue{1.0 - f.theta(), true};
      }
      return out;
    case DampingFamily::Tabulated: {
      if (!f.tail()) return out;
      const double p = f.tail()->p;
      const double c = f.tail()->c;
      if (p >= 0.0 || c <= 0.0) return out;
      const auto ex = extremes(f, spec);
      out.beta = BoundValue{-p, ex.inf_f.exact};
      // alpha needs f > 0 everywhere; a zero anywhere kills the weight.
      ZeroSetReport zs = zero_set(spec, f);
      if (zs.exact && zs.is_empty) out.alpha = BoundValue{-p, true};
      return out;
    }
  }
  return out;
}

RatioLimitSet ratio_limit_points(const DampingFunction& f, const SpectrumSpec& spec) {
  RatioLimitSet out;
  if (spec.bounded()) return out;
  switch (f.family()) {
    case DampingFamily::Zero:
    case DampingFamily::Constant:
      return out;
    case DampingFamily::Power:
      if (f.theta() == 1.0) out.values.push_back(1.0);
      return out;
    case DampingFamily::RotationalInertia:
      if (f.theta() == 2.0) out.values.push_back(1.0);
      return out;
    case DampingFamily::Tabulated:
      if (!f.tail()) {
        // Subsequential limits cannot be certified from finite data.
        out.certified = false;
        return out;
      }
      if (f.tail()->p == 1.0 && f.tail()->c > 0.0) out.values.push_back(f.tail()->c);
      return out;
  }
  return out;
}

}  // namespace semistab
