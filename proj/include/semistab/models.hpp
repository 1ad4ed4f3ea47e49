// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "semistab/damping.hpp"
#include "semistab/spectrum.hpp"

namespace semistab {

/// Preset pairing of spectrum and damping for the concrete systems, on the
/// canonical one-dimensional domain (0, pi) where the Laplacian eigenvalues
/// are exactly n^2.
struct ModelPreset {
  std::string name;
  SpectrumSpec spectrum;
  DampingFunction damping;
  /// sup f(s)/sqrt(s) < inf: the generator domain factorizes as a product
  /// of the natural second- and first-order spaces.
  bool domain_factorizes = false;
  std::string notes;
};

/// Wave equation with fractional damping: spectrum n^2, f(s) = s^theta.
ModelPreset wave(double theta);

/// Hinged beam/plate without rotational inertia: spectrum n^4,
/// f(s) = s^(theta/2).
ModelPreset beam(double theta);

/// Hinged beam/plate with rotational inertia omega > 0: spectrum
/// n^4/(1 + omega n^2), damping the RotationalInertia family.
ModelPreset beam_rotational(double theta, double omega);

/// Klein-Gordon with mass m > 0: continuous spectrum [m^2, inf), no damping.
ModelPreset klein_gordon(double mass);

}  // namespace semistab
