#pragma once

// Pointwise inequalities for pairs of complex numbers and their homogeneous
// reductions. Every *_gap function returns the left side of a "<= 0" claim.

#include <algorithm>
#include <cmath>
#include <complex>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"

namespace riesz::minorants {

/// (r, t) with z = 1 and w = r e^{it} after homogeneity normalization.
struct PolarPair {
  double r;
  double t;
};

namespace detail {

inline double wrap_symmetric(double a) {
  double x = std::remainder(a, 2.0 * kPi);  // [-pi, pi]
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

inline double wrap_positive(double a) {
  double x = std::fmod(a, 2.0 * kPi);
  if (x < 0.0) x += 2.0 * kPi;
  if (x >= 2.0 * kPi) x -= 2.0 * kPi;
  return x;
}

/// ((x^s + y^s)/2)^{1/s} for x, y >= 0, scaled to avoid overflow.
inline double power_mean(double x, double y, double s) {
  const double hi = std::max(x, y);
  if (hi == 0.0) return 0.0;
  const double lo = std::min(x, y) / hi;
  return hi * std::pow(0.5 * (1.0 + std::pow(lo, s)), 1.0 / s);
}

/// (1 - r^{2-s}) / (r - r^{1-s}), extended by its limits 0 at r = 0 and 1 - 2/s at r = 1.
inline double stationary_quotient(double r, double s) {
  constexpr double kCutoff = 1e-6;
  if (r >= 1.0 - kCutoff) return 1.0 - 2.0 / s;
  if (r <= 0.0) return 0.0;
  return (1.0 - std::pow(r, 2.0 - s)) / (r - std::pow(r, 1.0 - s));
}

}  // namespace detail

/// |zw|^{p/2} cos(p (pi - |theta|) / 2), theta = arg z + arg w reduced to (-pi, pi].
/// On 0 <= theta <= pi this is the two-argument form with t + u = theta.
inline double phi1(cplx z, cplx w, double p) {
  riesz::detail::require(p > 1.0 && p <= 2.0, "phi1: p must lie in (1, 2]");
  const double m = std::abs(z) * std::abs(w);
  if (m == 0.0) return 0.0;
  const double theta = std::abs(detail::wrap_symmetric(std::arg(z) + std::arg(w)));
  return std::pow(m, 0.5 * p) * std::cos(0.5 * p * (kPi - theta));
}

/// Angular profile of the p >= 2 minorant; 2 pi periodic and symmetric under t -> 2 pi - t.
inline double v_p(double t, double p) {
  riesz::detail::require(p >= 2.0, "v_p: p must be >= 2");
  const double x = detail::wrap_positive(t);
  const double edge = 2.0 * kPi / p;
  if (x <= edge) return -std::cos(0.5 * p * x);
  if (x >= 2.0 * kPi - edge) return -std::cos(0.5 * p * (2.0 * kPi - x));
  return std::max(std::abs(std::cos(0.5 * p * x)), std::abs(std::cos(0.5 * p * (2.0 * kPi - x))));
}

/// |zw|^{p/2} v_p(arg z + arg w).
inline double phi2(cplx z, cplx w, double p) {
  riesz::detail::require(p >= 2.0, "phi2: p must be >= 2");
  const double m = std::abs(z) * std::abs(w);
  if (m == 0.0) return 0.0;
  return std::pow(m, 0.5 * p) * v_p(std::arg(z) + std::arg(w), p);
}

/// -((|z|^s+|w|^s)/2)^{p/s} + |z + conj w|^p / (2^p sin^p(pi/2p)) + cot(pi/2p) phi1(z, w).
inline double lemma1_gap(cplx z, cplx w, const ParamSpace& ps) {
  const double p = ps.p();
  riesz::detail::require(p <= 2.0, "lemma1_gap: p must lie in (1, 2]");
  const double half = kPi / (2.0 * p);
  const double mean = detail::power_mean(std::abs(z), std::abs(w), ps.s());
  const double sum = std::abs(z + std::conj(w)) / (2.0 * std::sin(half));
  return -std::pow(mean, p) + std::pow(sum, p) + phi1(z, w, p) / std::tan(half);
}

/// -((|z|^s+|w|^s)/2)^{p/s} + |z + conj w|^p / (2^p cos^p(pi/2p)) + tan(pi/2p) phi2(z, w).
inline double lemma2_gap(cplx z, cplx w, const ParamSpace& ps) {
  const double p = ps.p();
  riesz::detail::require(p >= 2.0, "lemma2_gap: p must be >= 2");
  const double half = kPi / (2.0 * p);
  const double mean = detail::power_mean(std::abs(z), std::abs(w), ps.s());
  const double sum = std::abs(z + std::conj(w)) / (2.0 * std::cos(half));
  return -std::pow(mean, p) + std::pow(sum, p) + std::tan(half) * phi2(z, w, p);
}

/// lemma1_gap(1, r e^{it}) written out on r in [0, 1], t in [0, pi]. The third
/// term carries cos((pi - t) p / 2), as phi1 forces.
inline double reduced_phi3(PolarPair pt, const ParamSpace& ps) {
  const double p = ps.p(), s = ps.s();
  riesz::detail::require(p <= 2.0, "reduced_phi3: p must lie in (1, 2]");
  riesz::detail::require(pt.r >= 0.0 && pt.r <= 1.0, "reduced_phi3: r must lie in [0, 1]");
  riesz::detail::require(pt.t >= 0.0 && pt.t <= kPi, "reduced_phi3: t must lie in [0, pi]");
  const double half = kPi / (2.0 * p);
  const double r = pt.r, t = pt.t;
  const double base = std::max(0.0, 1.0 + r * r + 2.0 * r * std::cos(t));
  return std::pow(base, 0.5 * p) / std::pow(2.0 * std::sin(half), p) -
         std::pow(0.5 * (1.0 + std::pow(r, s)), p / s) +
         std::pow(r, 0.5 * p) / std::tan(half) * std::cos(0.5 * (kPi - t) * p);
}

/// lemma2_gap(1, r e^{it}) with s = p/(p-1), r in [0, 1], t in [0, 2 pi].
inline double reduced_phi4(PolarPair pt, double p) {
  riesz::detail::require(p >= 2.0, "reduced_phi4: p must be >= 2");
  riesz::detail::require(pt.r >= 0.0 && pt.r <= 1.0, "reduced_phi4: r must lie in [0, 1]");
  riesz::detail::require(pt.t >= 0.0 && pt.t <= 2.0 * kPi, "reduced_phi4: t must lie in [0, 2 pi]");
  const double s = p / (p - 1.0);
  const double half = kPi / (2.0 * p);
  const double r = pt.r, t = pt.t;
  const double base = std::max(0.0, 1.0 + r * r + 2.0 * r * std::cos(t));
  return std::pow(base, 0.5 * p) / std::pow(2.0 * std::cos(half), p) -
         std::pow(0.5 * (1.0 + std::pow(r, s)), p / s) +
         std::pow(r, 0.5 * p) * std::tan(half) * v_p(t, p);
}

/// Value of the (3) gap at an interior critical point, rearranged; must be >= 0.
inline double stationary_gap3(double r, double t, const ParamSpace& ps) {
  const double p = ps.p(), s = ps.s();
  riesz::detail::require(p <= 2.0 && s >= p && s <= 2.0,
                         "stationary_gap3: need 1 < p <= s <= 2");
  riesz::detail::require(r >= 0.0 && r <= 1.0, "stationary_gap3: r must lie in [0, 1]");
  riesz::detail::require(t >= 0.0 && t <= kPi - kPi / p, "stationary_gap3: t must lie in [0, pi - pi/p]");
  const double phase = 0.5 * (kPi - t) * p;
  return detail::stationary_quotient(r, s) * std::sin(phase) + std::sin(t + phase);
}

/// Same for (4) with s = p/(p-1), t in [0, pi/p].
inline double stationary_gap4(double r, double t, double p) {
  riesz::detail::require(p >= 2.0, "stationary_gap4: p must be >= 2");
  riesz::detail::require(r >= 0.0 && r <= 1.0, "stationary_gap4: r must lie in [0, 1]");
  riesz::detail::require(t >= 0.0 && t <= kPi / p, "stationary_gap4: t must lie in [0, pi/p]");
  const double s = p / (p - 1.0);
  return detail::stationary_quotient(r, s) * std::sin(0.5 * t * p) + std::sin((0.5 * p - 1.0) * t);
}

}  // namespace riesz::minorants
