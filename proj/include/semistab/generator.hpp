// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string>
#include <vector>

#include "semistab/damping.hpp"
#include "semistab/mode_algebra.hpp"
#include "semistab/spectrum.hpp"

namespace semistab {

/// Pair of characteristic roots over one spectrum point, with the damping
/// regime of that mode.
struct CharacteristicPair {
  std::complex<double> plus;
  std::complex<double> minus;
  ModeRegime regime = ModeRegime::Underdamped;
};

CharacteristicPair xi_pair(double s, double fs);

enum class PointLabel { XiPlus, XiMinus, LimitPoint, Zero };

std::string to_string(PointLabel label);
std::string to_string(ModeRegime regime);

struct PortraitPoint {
  std::complex<double> value;
  PointLabel label = PointLabel::XiPlus;
  double source = 0.0;  // the spectrum point s, or the ratio limit ell
  bool eigenvalue = false;
  ModeRegime regime = ModeRegime::Underdamped;
};

/// The computed spectrum of the evolution generator: characteristic roots
/// over sampled spectrum points, real points -1/ell contributed by ratio
/// limits, and the origin when the generator fails to be bijective.
struct GeneratorPortrait {
  std::vector<PortraitPoint> points;
  bool contains_zero = false;
  double spectral_bound = 0.0;  // sup of real parts over the generator spectrum
  bool spectral_bound_exact = false;
  std::vector<std::string> warnings;
};

/// Bijectivity of the generator: true iff sup f(s)/s over the spectrum is
/// finite (always true for bounded spectra). Unknown when tabulated data
/// lacks tail metadata over an unbounded spectrum.
Tristate generator_bijective(const DampingFunction& f, const SpectrumSpec& spec);

GeneratorPortrait portrait(const DampingFunction& f, const SpectrumSpec& spec,
                           int budget);

/// Intersection of the generator spectrum with the imaginary axis, minus
/// the origin: {+-i sqrt(s) : s in the zero-set}. Stored through the
/// positive sqrt values; the set is symmetric about 0.
struct ImaginaryAxisSpectrum {
  std::vector<double> sqrt_points;       // isolated sqrt(s), s in zero-set
  std::vector<Interval> sqrt_intervals;  // sqrt-images of zero subintervals
  bool exact = true;

  bool empty() const { return sqrt_points.empty() && sqrt_intervals.empty(); }
  /// Membership of i*lambda with the relative tolerance used by the
  /// resolvent guards: |lambda - sqrt(s)| <= tol (1 + sqrt(s)).
  bool contains(double lambda, double tol = 1e-9) const;
};

ImaginaryAxisSpectrum imaginary_spectrum(const DampingFunction& f,
                                         const SpectrumSpec& spec);

}  // namespace semistab
