#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks: naive O(M^2) transforms, adaptive
// quadrature, brute-force grids and explicit branch maxima.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

/// sum_n c_n e^{i n theta} with the exponential built from cos and sin.
inline cplx eval_terms(const std::map<long, cplx>& terms, double theta) {
  cplx acc{};
  for (const auto& [n, c] : terms) acc += c * cplx(std::cos(n * theta), std::sin(n * theta));
  return acc;
}

/// Naive DFT coefficient (1/M) sum_k x_k e^{-2 pi i n k / M}.
inline cplx dft_coefficient(const std::vector<cplx>& x, long n) {
  const auto M = static_cast<double>(x.size());
  cplx acc{};
  for (std::size_t k = 0; k < x.size(); ++k) {
    const double a = -2.0 * pi * static_cast<double>(n) * static_cast<double>(k) / M;
    acc += x[k] * cplx(std::cos(a), std::sin(a));
  }
  return acc / M;
}

/// Composite Simpson rule on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  if (n % 2) ++n;
  const double h = (b - a) / static_cast<double>(n);
  double acc = f(a) + f(b);
  for (std::size_t i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i));
  return acc * h / 3.0;
}

/// (1/2pi) int |f|^p, then ^(1/p), by Simpson.
inline double circle_lp(const std::function<cplx(double)>& f, double p, std::size_t n = 20000) {
  const double m = simpson([&](double t) { return std::pow(std::abs(f(t)), p); }, 0.0, 2.0 * pi, n);
  return std::pow(m / (2.0 * pi), 1.0 / p);
}

/// T(alpha, beta) written without any rescaling.
inline double T(double a, double b, double p, double s) {
  const double num = std::pow(std::pow(std::abs(a + b), s) + std::pow(std::abs(a - b), s), 1.0 / s);
  const double c = std::cos(pi / (2 * p)), sn = std::sin(pi / (2 * p));
  return num / (2.0 * std::sqrt(a * a * c * c + b * b * sn * sn));
}

/// Brute-force minimum of T over directions (cos phi, sin phi), phi in [0, pi].
inline double T_infimum_2d(double p, double s, std::size_t n) {
  double best = 1e300;
  // Endpoint-inclusive: for s < 1 the infimum sits on an axis direction with a
  // t^s cusp that a midpoint grid would miss by O(step^s).
  for (std::size_t i = 0; i <= n; ++i) {
    const double phi = pi * static_cast<double>(i) / static_cast<double>(n);
    best = std::min(best, T(std::cos(phi), std::sin(phi), p, s));
  }
  return best;
}

/// Phi_1 as the larger of its two harmonic branches |zw|^{p/2} cos(p(pi -+ theta)/2).
inline double phi1(cplx z, cplx w, double p) {
  const double m = std::abs(z) * std::abs(w);
  if (m == 0.0) return 0.0;
  const double th = std::arg(z * w);  // (-pi, pi]
  return std::pow(m, p / 2) * std::max(std::cos(p * (pi - th) / 2), std::cos(p * (pi + th) / 2));
}

/// v_p folded onto [0, pi] by evenness before branch selection.
inline double v_p(double t, double p) {
  double x = std::fmod(t, 2.0 * pi);
  if (x < 0) x += 2.0 * pi;
  if (x > pi) x = 2.0 * pi - x;
  if (x <= 2.0 * pi / p) return -std::cos(p * x / 2);
  return std::max(std::abs(std::cos(p * x / 2)), std::abs(std::cos(p * (2.0 * pi - x) / 2)));
}

inline double phi2(cplx z, cplx w, double p) {
  const double m = std::abs(z) * std::abs(w);
  if (m == 0.0) return 0.0;
  return std::pow(m, p / 2) * v_p(std::arg(z) + std::arg(w), p);
}

/// Left sides of the two pointwise inequalities, straight from the formula.
inline double lemma1(cplx z, cplx w, double p, double s) {
  const double mean = std::pow((std::pow(std::abs(z), s) + std::pow(std::abs(w), s)) / 2, p / s);
  const double h = pi / (2 * p);
  return -mean + std::pow(std::abs(z + std::conj(w)), p) / (std::pow(2.0, p) * std::pow(std::sin(h), p)) +
         std::cos(h) / std::sin(h) * phi1(z, w, p);
}

inline double lemma2(cplx z, cplx w, double p, double s) {
  const double mean = std::pow((std::pow(std::abs(z), s) + std::pow(std::abs(w), s)) / 2, p / s);
  const double h = pi / (2 * p);
  return -mean + std::pow(std::abs(z + std::conj(w)), p) / (std::pow(2.0, p) * std::pow(std::cos(h), p)) +
         std::tan(h) * phi2(z, w, p);
}

/// G(t) = (1 + t^s)^{1/s} / sqrt(1 + t^2 - 2t cos(pi/p)).
inline double G(double t, double p, double s) {
  return std::pow(1 + std::pow(t, s), 1 / s) / std::sqrt(1 + t * t - 2 * t * std::cos(pi / p));
}

struct Argmin {
  double value, t;
};

/// Minimum of G on the (n+1)-point uniform grid of [0, 1].
inline Argmin G_grid_min(double p, double s, std::size_t n) {
  Argmin best{1e300, 0.0};
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(n);
    const double v = G(t, p, s);
    if (v < best.value) best = {v, t};
  }
  return best;
}

/// Random polynomial coefficients, uniform in the unit square per frequency.
inline std::map<long, cplx> random_terms(std::mt19937_64& rng, long degree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::map<long, cplx> terms;
  for (long n = -degree; n <= degree; ++n) terms[n] = {u(rng), u(rng)};
  return terms;
}

}  // namespace oracle
