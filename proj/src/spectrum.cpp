// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "semistab/damping.hpp"

namespace semistab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Internal sampling budget used when an operation needs a representative
// point set but exposes no budget parameter.
constexpr int kDefaultZeroSamples = 128;

}  // namespace

double TailFormula::eigenvalue(int n) const {
  const double x = static_cast<double>(n);
  switch (form) {
    case TailForm::Square: return x * x;
    case TailForm::Fourth: return x * x * x * x;
    case TailForm::RotationalQuotient: return x * x * x * x / (1.0 + omega * x * x);
    case TailForm::PowerLaw: return c * std::pow(x, p);
  }
  return 0.0;
}

bool Interval::contains(double s, double tol) const {
  if (s < lo - tol) return false;
  if (unbounded) return true;
  return s <= hi + tol;
}

SpectrumSpec SpectrumSpec::discrete(std::vector<double> eigenvalues,
                                    std::optional<TailFormula> tail) {
  for (double s : eigenvalues) {
    if (!(s > 0.0)) throw NonPositivePoint("spectrum point must be positive, got " + std::to_string(s));
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  eigenvalues.erase(std::unique(eigenvalues.begin(), eigenvalues.end()), eigenvalues.end());

  if (tail) {
    if (tail->start_index < 1) throw InvalidParameter("tail start index must be >= 1");
    if (tail->form == TailForm::PowerLaw && (!(tail->c > 0.0) || !(tail->p > 0.0)))
      throw InvalidParameter("power-law tail requires c > 0 and p > 0");
    if (tail->form == TailForm::RotationalQuotient && !(tail->omega > 0.0))
      throw InvalidParameter("rotational-quotient tail requires omega > 0");
    const double first = tail->eigenvalue(tail->start_index);
    if (!(first > 0.0)) throw NonPositivePoint("tail must generate positive eigenvalues");
    if (!eigenvalues.empty() && first <= eigenvalues.back())
      throw InvalidParameter("tail must start strictly above the explicit eigenvalues");
  }
  if (eigenvalues.empty() && !tail) throw EmptySpectrum("no eigenvalues and no tail");

  SpectrumSpec spec;
  spec.kind_ = SpectrumKind::Discrete;
  spec.head_ = std::move(eigenvalues);
  spec.tail_ = tail;
  spec.bounded_ = !tail.has_value();
  spec.s0_ = spec.head_.empty() ? spec.tail_->eigenvalue(spec.tail_->start_index)
                                : spec.head_.front();
  return spec;
}

SpectrumSpec SpectrumSpec::continuous(std::vector<Interval> intervals) {
  if (intervals.empty()) throw EmptySpectrum("no spectrum intervals");
  for (auto& iv : intervals) {
    if (!(iv.lo > 0.0)) throw NonPositivePoint("interval endpoints must be positive");
    if (!iv.unbounded && iv.hi < iv.lo) throw InvalidParameter("interval upper end below lower end");
  }
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < intervals.size(); ++i) {
    if (intervals[i].unbounded || intervals[i].hi >= intervals[i + 1].lo)
      throw InvalidParameter("spectrum intervals must be disjoint and ordered");
  }

  SpectrumSpec spec;
  spec.kind_ = SpectrumKind::Continuous;
  spec.intervals_ = std::move(intervals);
  spec.bounded_ = !spec.intervals_.back().unbounded;
  spec.s0_ = spec.intervals_.front().lo;
  return spec;
}

double SpectrumSpec::s_max() const {
  if (!bounded_) return kInf;
  if (kind_ == SpectrumKind::Discrete) return head_.back();
  return intervals_.back().hi;
}

double SpectrumSpec::eigenvalue(int n) const {
  if (kind_ != SpectrumKind::Discrete || n < 0)
    throw InvalidParameter("eigenvalue() needs a discrete spectrum and n >= 0");
  const int head_count = static_cast<int>(head_.size());
  if (n < head_count) return head_[static_cast<std::size_t>(n)];
  if (!tail_) throw OutOfRange("eigenvalue index beyond a finite spectrum");
  return tail_->eigenvalue(tail_->start_index + (n - head_count));
}

int SpectrumSpec::eigenvalue_count() const {
  if (kind_ != SpectrumKind::Discrete || tail_)
    throw InvalidParameter("eigenvalue_count() needs a bounded discrete spectrum");
  return static_cast<int>(head_.size());
}

bool SpectrumSpec::contains(double s, double tol) const {
  if (kind_ == SpectrumKind::Continuous) {
    for (const auto& iv : intervals_)
      if (iv.contains(s, tol)) return true;
    return false;
  }
  for (double e : head_)
    if (std::abs(s - e) <= tol) return true;
  if (tail_) {
    // The tail is strictly increasing: bracket s by an integer search.
    int lo = tail_->start_index, hi = lo + 1;
    while (tail_->eigenvalue(hi) < s - tol && hi < 1 << 26) hi *= 2;
    while (lo < hi) {
      const int mid = lo + (hi - lo) / 2;
      if (tail_->eigenvalue(mid) < s - tol)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (std::abs(tail_->eigenvalue(lo) - s) <= tol) return true;
  }
  return false;
}

std::vector<double> sample_modes(const SpectrumSpec& spec, int budget,
                                 const SamplingPolicy& policy) {
  if (budget < 1) throw InvalidParameter("sampling budget must be >= 1");

  std::vector<double> out;
  if (spec.kind() == SpectrumKind::Discrete) {
    const int head_count = static_cast<int>(spec.head().size());
    const int total = spec.tail() ? budget : std::min(budget, head_count);
    out.reserve(static_cast<std::size_t>(total));
    for (int n = 0; n < total; ++n) out.push_back(spec.eigenvalue(n));
    return out;
  }

  const auto& intervals = spec.intervals();
  const std::size_t k = intervals.size();

  // Effective endpoints; the unbounded interval is cut at the policy cap.
  std::vector<double> lo(k), hi(k), weight(k);
  double total_weight = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    lo[i] = intervals[i].lo;
    hi[i] = intervals[i].unbounded ? std::max(policy.unbounded_cap, 10.0 * lo[i])
                                   : intervals[i].hi;
    weight[i] = std::max(std::log10(hi[i] / lo[i]), 1e-6);
    total_weight += weight[i];
  }

  if (budget <= static_cast<int>(k)) {
    for (int i = 0; i < budget; ++i) out.push_back(lo[static_cast<std::size_t>(i)]);
    return out;
  }

  // At least two points per non-degenerate interval, remainder by weight.
  std::vector<int> count(k);
  int used = 0;
  for (std::size_t i = 0; i < k; ++i) {
    count[i] = (hi[i] > lo[i]) ? 2 : 1;
    used += count[i];
  }
  int rest = budget - used;
  while (rest > 0) {
    // Assign one point to the interval with the largest weight per point.
    std::size_t best = 0;
    double best_score = -1.0;
    for (std::size_t i = 0; i < k; ++i) {
      const double score = weight[i] / count[i];
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    ++count[best];
    --rest;
  }

  for (std::size_t i = 0; i < k; ++i) {
    const int n = count[i];
    if (n == 1 || hi[i] <= lo[i]) {
      out.push_back(lo[i]);
      continue;
    }
    const double llo = std::log(lo[i]), lhi = std::log(hi[i]);
    for (int j = 0; j < n; ++j) {
      const double t = static_cast<double>(j) / (n - 1);
      double s = std::exp(llo + t * (lhi - llo));
      if (j == 0) s = lo[i];
      if (j == n - 1) s = hi[i];
      out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool ZeroSetReport::contains(double s, double tol) const {
  if (whole_spectrum) return true;
  for (double p : points)
    if (std::abs(s - p) <= tol * (1.0 + std::abs(p))) return true;
  for (const auto& iv : zero_intervals)
    if (iv.contains(s, tol)) return true;
  return false;
}

namespace {

// Zeros of the piecewise-linear interpolant restricted to one spectrum
// interval. A linear segment is <= tol on a subsegment only if an endpoint
// is, so knot values decide everything.
void tabulated_zeros_on_interval(const DampingFunction& f, const Interval& iv,
                                 double tol, ZeroSetReport& report) {
  const auto& knots = f.knots();
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const auto [x0, y0] = knots[i];
    const auto [x1, y1] = knots[i + 1];
    const double seg_lo = std::max(x0, iv.lo);
    const double seg_hi = iv.unbounded ? x1 : std::min(x1, iv.hi);
    if (seg_lo > seg_hi) continue;
    if (y0 <= tol && y1 <= tol) {
      if (seg_hi > seg_lo)
        report.zero_intervals.push_back({seg_lo, seg_hi, false});
      else
        report.points.push_back(seg_lo);
    } else if (y0 <= tol && iv.contains(x0)) {
      report.points.push_back(x0);
    } else if (y1 <= tol && iv.contains(x1)) {
      report.points.push_back(x1);
    }
  }
}

}  // namespace

ZeroSetReport zero_set(const SpectrumSpec& spec, const DampingFunction& f,
                       double tol) {
  if (tol < 0.0) throw InvalidParameter("zero-set tolerance must be >= 0");
  ZeroSetReport report;

  const DampingFamily family = f.family();
  const bool vanishes_identically =
      family == DampingFamily::Zero ||
      (family == DampingFamily::Constant && f.constant_value() == 0.0);

  if (vanishes_identically) {
    report.whole_spectrum = true;
    report.is_empty = false;
    report.exact = true;
    report.has_positive_measure = Tristate::True;
    if (spec.kind() == SpectrumKind::Discrete) {
      report.points = sample_modes(spec, kDefaultZeroSamples);
      report.countable = Tristate::True;
    } else {
      report.zero_intervals = spec.intervals();
      report.countable = Tristate::False;
    }
    return report;
  }

  if (family != DampingFamily::Tabulated) {
    // Constant c > 0, Power and RotationalInertia are strictly positive on
    // (0, inf): the zero-set is exactly empty.
    return report;
  }

  // Tabulated damping: exact zeros of the piecewise-linear interpolant on
  // the covered range; the closed-form tail (when present) is positive
  // unless its coefficient vanishes.
  const auto& knots = f.knots();
  const double k_lo = knots.front().first;
  const double k_hi = knots.back().first;
  bool covered = spec.s0() >= k_lo;

  if (spec.kind() == SpectrumKind::Discrete) {
    constexpr int kEnumCap = 100000;
    bool beyond_exists = !spec.bounded();
    std::optional<double> first_beyond;
    int n = 0;
    for (; n < kEnumCap; ++n) {
      if (!spec.tail() && n >= static_cast<int>(spec.head().size())) break;
      const double s = spec.eigenvalue(n);
      if (s > k_hi) {
        beyond_exists = true;
        first_beyond = s;
        break;
      }
      if (s < k_lo) {
        covered = false;
        continue;
      }
      if (f(s) <= tol) report.points.push_back(s);
    }
    if (n == kEnumCap) covered = false;
    if (beyond_exists) {
      if (!f.tail()) {
        covered = false;
      } else if (f.tail()->c == 0.0) {
        // The closed-form tail vanishes identically: every eigenvalue
        // beyond the data belongs to the zero-set.
        if (first_beyond) report.points.push_back(*first_beyond);
        report.is_empty = false;
        report.countable = Tristate::True;
        report.has_positive_measure = Tristate::True;
        report.exact = covered;
        return report;
      }
    }
    report.is_empty = report.points.empty();
    report.exact = covered;
    if (covered) {
      report.countable = Tristate::True;  // subsets of a discrete spectrum
      report.has_positive_measure = tristate_of(!report.points.empty());
    } else {
      report.countable = report.points.empty() ? Tristate::Unknown : Tristate::True;
      report.has_positive_measure =
          report.points.empty() ? Tristate::Unknown : Tristate::True;
    }
    return report;
  }

  // Continuous spectrum.
  for (const auto& iv : spec.intervals()) {
    tabulated_zeros_on_interval(f, iv, tol, report);
    const double iv_hi = iv.unbounded ? kInf : iv.hi;
    if (iv_hi > k_hi && !f.tail()) covered = false;
    if (iv_hi > k_hi && f.tail() && f.tail()->c == 0.0) {
      report.zero_intervals.push_back({std::max(iv.lo, k_hi), iv.hi, iv.unbounded});
    }
  }
  std::sort(report.points.begin(), report.points.end());
  report.points.erase(std::unique(report.points.begin(), report.points.end()),
                      report.points.end());
  report.is_empty = report.points.empty() && report.zero_intervals.empty();
  report.exact = covered;

  if (!report.zero_intervals.empty()) {
    report.countable = Tristate::False;
    report.has_positive_measure = Tristate::True;
  } else if (!report.points.empty()) {
    // Isolated zeros inside continuous spectrum: the spectral measure may
    // or may not charge them, and the data cannot tell.
    report.countable = Tristate::Unknown;
    report.has_positive_measure = Tristate::Unknown;
  } else if (covered) {
    report.countable = Tristate::True;
    report.has_positive_measure = Tristate::False;
  } else {
    report.countable = Tristate::Unknown;
    report.has_positive_measure = Tristate::Unknown;
  }
  return report;
}

}  // namespace semistab
