#pragma once

// One-variable estimates on the edges of the reduced rectangles (r = 0, r = 1,
// t = 0) and the scalar facts they rest on. Margins are ">= 0" quantities,
// phi-type values are "<= 0" quantities.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"

namespace riesz::minorants {

/// (1 - cot(pi/2p) cos(pt)) / sin^p t - 1 / sin^p(pi/2p); minimum 0 at t = pi/2p.
/// Identically 0 at p = 2.
inline double boundary_r1_case_p_lt2(double t, double p) {
  riesz::detail::require(p > 1.0 && p <= 2.0, "boundary_r1_case_p_lt2: p must lie in (1, 2]");
  riesz::detail::require(t >= 1e-6 && t <= kPi / 2, "boundary_r1_case_p_lt2: t must lie in [1e-6, pi/2]");
  const double half = kPi / (2.0 * p);
  return (1.0 - std::cos(p * t) / std::tan(half)) / std::pow(std::sin(t), p) -
         1.0 / std::pow(std::sin(half), p);
}

/// t = 0 edge of the p < 2 inequality with s = p.
inline double section5_phi(double r, double p) {
  riesz::detail::require(p > 1.0 && p <= 2.0, "section5_phi: p must lie in (1, 2]");
  riesz::detail::require(r >= 0.0 && r <= 1.0, "section5_phi: r must lie in [0, 1]");
  const double half = kPi / (2.0 * p);
  return std::pow(1.0 - r, p) / std::pow(2.0 * std::sin(half), p) - 0.5 * (1.0 + std::pow(r, p)) +
         std::pow(r, 0.5 * p) / std::tan(half);
}

struct Section5Margins {
  double upper;  // >= 0 on [4/3, 2]
  double lower;  // >= 0 on (1, 4/3]
};

inline Section5Margins section5_aux(double p) {
  riesz::detail::require(p > 1.0 && p <= 2.0, "section5_aux: p must lie in (1, 2]");
  const double half = kPi / (2.0 * p);
  const double sn = std::sin(half);
  const double cot = 1.0 / std::tan(half);
  return {std::pow(2.0, p - 1.0) * std::pow(sn, p) - std::pow(1.0 + cot, 1.0 - 0.5 * p),
          1.0 - 4.0 / (std::pow(4.0, p) * std::pow(sn, 2.0 * p)) - cot * cot};
}

/// t = 0 edge of the p >= 9 inequality with s = p/(p-1).
inline double section6_phi(double r, double p) {
  riesz::detail::require(p >= 2.0, "section6_phi: p must be >= 2");
  riesz::detail::require(r >= 0.0 && r <= 1.0, "section6_phi: r must lie in [0, 1]");
  const double half = kPi / (2.0 * p);
  return std::pow((1.0 + r) / (2.0 * std::cos(half)), p) -
         std::pow(0.5 * (1.0 + std::pow(r, p / (p - 1.0))), p - 1.0) -
         std::pow(r, 0.5 * p) * std::tan(half);
}

/// Rational lower bound for 2^{1/p} cos(pi/2p) - 1 on [9, 12]; first matching
/// closed interval wins at the shared endpoints.
inline std::optional<double> section6_table_c(double p) {
  if (p >= 9.0 && p <= 9.5) return 303.0 / 5000.0;
  if (p > 9.5 && p <= 10.0) return 29.0 / 500.0;
  if (p > 10.0 && p <= 11.0) return 1.0 / 19.0;
  if (p > 11.0 && p <= 12.0) return 1.0 / 20.0;
  return std::nullopt;
}

/// ((1 - 2/p)^{1/2} / (1 - 1/p))^p.
inline double section6_L(double p) {
  return std::pow(std::sqrt(1.0 - 2.0 / p) / (1.0 - 1.0 / p), p);
}

struct Section6Margins {
  double r_p;                       // 2^{1/p} cos(pi/2p) - 1
  double margin_rp;                 // r_p - 1/(2p)
  std::optional<double> c;          // table value, [9, 12] only
  std::optional<double> margin_c;   // r_p - c
  double A;                         // r_p^{1/(p-1)} (1 + r_p^{p/(p-1)})^{p-2} (1 + r_p)
  double margin_A;                  // A - 1
  std::optional<double> margin_Ac;  // A evaluated at c, minus 1
  double margin_L;                  // L(p) - cot(pi/2p)(sec^p(pi/2p) - 1)
  double margin_L_monotone;         // L(p) - L(9)
  std::optional<double> margin_h;   // h(p) - 1, p >= 12 only

  /// Smallest of the margins that are present.
  double worst() const {
    double w = std::min({margin_rp, margin_A, margin_L, margin_L_monotone});
    for (const auto& m : {margin_c, margin_Ac, margin_h})
      if (m) w = std::min(w, *m);
    return w;
  }
};

inline Section6Margins section6_aux(double p) {
  riesz::detail::require(p >= 9.0 && p <= 40.0, "section6_aux: p must lie in [9, 40]");
  const double half = kPi / (2.0 * p);
  const double q = p / (p - 1.0);
  Section6Margins m{};
  m.r_p = std::pow(2.0, 1.0 / p) * std::cos(half) - 1.0;
  m.margin_rp = m.r_p - 1.0 / (2.0 * p);
  auto a_of = [&](double x) {
    return std::pow(x, 1.0 / (p - 1.0)) * std::pow(1.0 + std::pow(x, q), p - 2.0) * (1.0 + x);
  };
  m.A = a_of(m.r_p);
  m.margin_A = m.A - 1.0;
  m.c = section6_table_c(p);
  if (m.c) {
    m.margin_c = m.r_p - *m.c;
    m.margin_Ac = a_of(*m.c) - 1.0;
  }
  const double L = section6_L(p);
  m.margin_L = L - (std::pow(1.0 / std::cos(half), p) - 1.0) / std::tan(half);
  m.margin_L_monotone = L - section6_L(9.0);
  if (p >= 12.0) {
    const double x = 1.0 / (2.0 * p);
    m.margin_h = (1.0 + (p - 1.0) * std::pow(x, q)) * std::pow(x, 1.0 / (p - 1.0)) - 1.0;
  }
  return m;
}

/// Worst margins of the monotonicity facts behind the r = 1 edge.
///  p <= 2: bound = min f - tan(pi/2p)/sin^p(pi/2p) with f(t) = sin(pt)/(cos t sin^{p-1} t)
///          on [pi/2p, pi/2); sign = 1 - p cos^2(pi/2p); monotone = min f(t_{k+1}) - f(t_k).
///  p > 2:  bound = -max h on [pi/2p, pi/p] with h(t) = p sin t cos((p-1)t) - sin(pt);
///          sign = 1 - p sin^2(pi/2p); monotone = min F(t_k) - F(t_{k+1}) with
///          F(t) = sin(pt)/(sin t cos^{p-1} t).
struct MonotoneMargins {
  double bound;
  double sign;
  double monotone;

  double worst() const { return std::min({bound, sign, monotone}); }
};

inline MonotoneMargins aux_monotone_checks(double p, std::size_t samples = 2000) {
  riesz::detail::require(p > 1.0, "aux_monotone_checks: p must be > 1");
  riesz::detail::require(samples >= 2, "aux_monotone_checks: need at least two samples");
  const double half = kPi / (2.0 * p);
  const double inf = std::numeric_limits<double>::infinity();
  MonotoneMargins m{inf, 0.0, inf};
  const double n = static_cast<double>(samples - 1);

  if (p <= 2.0) {
    auto f = [p](double t) {
      return std::sin(p * t) / (std::cos(t) * std::pow(std::sin(t), p - 1.0));
    };
    const double target = std::tan(half) / std::pow(std::sin(half), p);
    const double lo = half, hi = kPi / 2 - 1e-6;  // f blows up at pi/2 for p < 2
    double prev = f(lo);
    m.bound = prev - target;
    for (std::size_t k = 1; k < samples; ++k) {
      const double v = f(lo + (hi - lo) * static_cast<double>(k) / n);
      m.bound = std::min(m.bound, v - target);
      m.monotone = std::min(m.monotone, v - prev);
      prev = v;
    }
    const double c = std::cos(half);
    m.sign = 1.0 - p * c * c;
    return m;
  }

  auto h = [p](double t) { return p * std::sin(t) * std::cos((p - 1.0) * t) - std::sin(p * t); };
  auto F = [p](double t) {
    return std::sin(p * t) / (std::sin(t) * std::pow(std::cos(t), p - 1.0));
  };
  const double lo = half, hi = kPi / p;
  double prev = F(lo);
  m.bound = -h(lo);
  for (std::size_t k = 1; k < samples; ++k) {
    const double t = lo + (hi - lo) * static_cast<double>(k) / n;
    const double v = F(t);
    m.bound = std::min(m.bound, -h(t));
    m.monotone = std::min(m.monotone, prev - v);
    prev = v;
  }
  const double sn = std::sin(half);
  m.sign = 1.0 - p * sn * sn;
  return m;
}

}  // namespace riesz::minorants
