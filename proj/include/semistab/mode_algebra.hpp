// Copyright (c) the semistab contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Closed-form 2x2 algebra of a single spectral mode. In the energy
// coordinates (w, v) = (sqrt(s) u, v) the mode generator is
//
//     A_s = [ 0        sqrt(s) ]
//           [ -sqrt(s) -f(s)   ]
//
// with characteristic roots xi^2 + f(s) xi + s = 0, and the Euclidean norm
// of (w, v) equals the energy norm of the mode. Everything here is
// templated on the scalar so tests can rerun the formulas in extended
// precision.

#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

namespace semistab {

enum class ModeRegime { Underdamped, Critical, Overdamped };

/// Relative band around f(s)^2 = 4s inside which the double-root formulas
/// are used; the distinct-root propagator divides by xi+ - xi- and loses
/// accuracy there.
inline constexpr double kCriticalBand = 1e-12;

template <typename Scalar>
struct ModeRoots {
  std::complex<Scalar> plus;
  std::complex<Scalar> minus;
  ModeRegime regime = ModeRegime::Underdamped;
};

/// Roots of xi^2 + fs xi + s = 0 for s > 0, fs >= 0. In the overdamped
/// regime the larger-magnitude root is computed first and the other
/// recovered from the product xi+ xi- = s, so no cancellation occurs even
/// when fs >> sqrt(s).
template <typename Scalar>
ModeRoots<Scalar> characteristic_roots(Scalar s, Scalar fs) {
  using C = std::complex<Scalar>;
  const Scalar disc = fs * fs - 4 * s;
  const Scalar scale = std::max(fs * fs, 4 * s);
  if (std::abs(disc) <= Scalar(kCriticalBand) * scale) {
    const Scalar xi = -fs / 2;
    return {C(xi, 0), C(xi, 0), ModeRegime::Critical};
  }
  if (disc < 0) {
    const Scalar im = std::sqrt(-disc) / 2;
    return {C(-fs / 2, im), C(-fs / 2, -im), ModeRegime::Underdamped};
  }
  const Scalar big = -(fs + std::sqrt(disc)) / 2;  // more negative root
  return {C(s / big, 0), C(big, 0), ModeRegime::Overdamped};
}

template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> mode_generator(Scalar s, Scalar fs) {
  const Scalar a = std::sqrt(s);
  Eigen::Matrix<Scalar, 2, 2> m;
  m << 0, a, -a, -fs;
  return m;
}

/// Inverse of the mode generator: (1/s) [ -fs  -sqrt(s); sqrt(s)  0 ].
template <typename Scalar>
Eigen::Matrix<Scalar, 2, 2> mode_generator_inverse(Scalar s, Scalar fs) {
  const Scalar a = std::sqrt(s);
  Eigen::Matrix<Scalar, 2, 2> m;
  m << -fs / s, -a / s, a / s, 0;
  return m;
}

/// Largest singular value of a 2x2 matrix from the exact identity
/// sigma_max^2 = (|M|_F^2 + sqrt(|M|_F^4 - 4 |det M|^2)) / 2.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real operator_norm_2x2(
    const Eigen::MatrixBase<Derived>& m) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const Real fro2 = m.squaredNorm();
  const Real det2 = std::norm(std::complex<Real>(m.determinant()));
  Real inner = fro2 * fro2 - 4 * det2;
  if (inner < 0) inner = 0;
  return std::sqrt((fro2 + std::sqrt(inner)) / 2);
}

/// exp(t A_s) in closed form. Distinct roots:
///   (e^{xi+ t} (A - xi- I) - e^{xi- t} (A - xi+ I)) / (xi+ - xi-);
/// double root xi = -fs/2:  e^{xi t} (I + t (A - xi I)).
/// The result is a contraction (operator 2-norm <= 1) for all t >= 0.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> mode_propagator(Scalar s, Scalar fs,
                                                          Scalar t) {
  using C = std::complex<Scalar>;
  using Mat = Eigen::Matrix<C, 2, 2>;
  if (t == Scalar(0)) return Mat::Identity();
  const Mat gen = mode_generator(s, fs).template cast<C>();
  const ModeRoots<Scalar> roots = characteristic_roots(s, fs);
  if (roots.regime == ModeRegime::Critical) {
    const C xi = roots.plus;
    return std::exp(xi * t) * (Mat::Identity() + t * (gen - xi * Mat::Identity()));
  }
  const C ep = std::exp(roots.plus * t);
  const C em = std::exp(roots.minus * t);
  const Mat mp = gen - roots.minus * Mat::Identity();
  const Mat mm = gen - roots.plus * Mat::Identity();
  return (ep * mp - em * mm) / (roots.plus - roots.minus);
}

/// (i lambda I - A_s)^{-1}; det = (s - lambda^2) + i lambda fs.
template <typename Scalar>
Eigen::Matrix<std::complex<Scalar>, 2, 2> mode_resolvent(Scalar s, Scalar fs,
                                                         Scalar lambda) {
  using C = std::complex<Scalar>;
  const Scalar a = std::sqrt(s);
  const C il(0, lambda);
  const C det = C(s - lambda * lambda, lambda * fs);
  Eigen::Matrix<C, 2, 2> adj;
  adj << il + C(fs), C(a), C(-a), il;
  return adj / det;
}

}  // namespace semistab
