// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0

#include "semistab/models.hpp"

#include <cmath>

namespace semistab {

namespace {

bool factorizes(const DampingFunction& f, const SpectrumSpec& spec) {
  const auto ex = extremes(f, spec);
  return ex.sup_f_over_sqrt_s.exact && std::isfinite(ex.sup_f_over_sqrt_s.value);
}

}  // namespace

ModelPreset wave(double theta) {
  SpectrumSpec spec = SpectrumSpec::discrete({}, TailFormula{TailForm::Square, 1.0, 1.0, 2.0, 1});
  DampingFunction f = DampingFunction::power(theta);
  const bool fact = factorizes(f, spec);
  return {"wave", spec, f, fact,
          "wave equation on (0, pi) with fractional damping exponent theta"};
}

ModelPreset beam(double theta) {
  SpectrumSpec spec = SpectrumSpec::discrete({}, TailFormula{TailForm::Fourth, 1.0, 1.0, 4.0, 1});
  DampingFunction f = DampingFunction::power(theta / 2.0);
  const bool fact = factorizes(f, spec);
  return {"beam", spec, f, fact,
          "hinged beam/plate on (0, pi), no rotational inertia, damping exponent theta"};
}

ModelPreset beam_rotational(double theta, double omega) {
  if (!(omega > 0.0)) throw InvalidParameter("beam_rotational requires omega > 0");
  TailFormula tail{TailForm::RotationalQuotient, omega, 1.0, 2.0, 1};
  SpectrumSpec spec = SpectrumSpec::discrete({}, tail);
  DampingFunction f = DampingFunction::rotational_inertia(theta, omega);
  const bool fact = factorizes(f, spec);
  return {"beam-rot", spec, f, fact,
          "hinged beam/plate on (0, pi) with rotational inertia omega"};
}

ModelPreset klein_gordon(double mass) {
  if (!(mass > 0.0)) throw InvalidParameter("klein_gordon requires mass > 0");
  SpectrumSpec spec = SpectrumSpec::continuous({{mass * mass, 0.0, true}});
  DampingFunction f = DampingFunction::zero();
  return {"klein-gordon", spec, f, true,
          "conservative Klein-Gordon system; continuous spectrum, no damping"};
}

}  // namespace semistab
