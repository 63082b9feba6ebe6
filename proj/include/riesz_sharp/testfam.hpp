#pragma once

// Near-extremal family f = alpha Re g + i beta Im g with
// g(z) = ((1+z)/(1-z))^{2 gamma / pi}, sampled on a dilated circle, and the
// closed-form ratio its projections approach.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"

namespace riesz::testfam {

struct TestFamilyParams {
  double alpha;
  double beta;
  double gamma;  // radians, in (0, pi/2)
  double rho;    // dilate radius, in (0, 1)

  void validate() const {
    detail::require(std::isfinite(alpha) && std::isfinite(beta) && (alpha != 0.0 || beta != 0.0),
                    "TestFamilyParams: (alpha, beta) must be finite and not both zero");
    detail::require(gamma > 0.0 && gamma < kPi / 2, "TestFamilyParams: gamma must lie in (0, pi/2)");
    detail::require(rho > 0.0 && rho < 1.0, "TestFamilyParams: rho must lie in (0, 1)");
  }
};

/// Principal-branch power ((1+z)/(1-z))^{2 gamma/pi}; the base has positive
/// real part on the open disk.
inline cplx eval_g_gamma(double gamma, cplx z) {
  detail::require(std::abs(z) < 1.0, "eval_g_gamma: |z| must be < 1");
  detail::require(gamma >= 0.0 && gamma < kPi / 2, "eval_g_gamma: gamma must lie in [0, pi/2)");
  const cplx base = (1.0 + z) / (1.0 - z);
  return std::exp((2.0 * gamma / kPi) * std::log(base));
}

/// Samples of f_gamma on the radius-rho circle.
inline CircleGrid build_test_function(const TestFamilyParams& tp, std::size_t M) {
  tp.validate();
  detail::require(M >= 2 && std::has_single_bit(M), "build_test_function: M must be a power of two");
  std::vector<cplx> out(M);
  for (std::size_t k = 0; k < M; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(M);
    const cplx g = eval_g_gamma(tp.gamma, std::polar(tp.rho, theta));
    out[k] = cplx{tp.alpha * g.real(), tp.beta * g.imag()};
  }
  return CircleGrid(tp.rho, std::move(out));
}

/// (|a+b|^s + |a-b|^s)^{1/s} / (2 (a^2 cos^2(pi/2p) + b^2 sin^2(pi/2p))^{1/2}).
inline double closed_form_T(double alpha, double beta, const ParamSpace& ps) {
  detail::require(alpha != 0.0 || beta != 0.0, "closed_form_T: (alpha, beta) must not both vanish");
  const double s = ps.s();
  const double x = std::abs(alpha + beta);
  const double y = std::abs(alpha - beta);
  const double hi = std::max(x, y);
  const double num = hi * std::pow(1.0 + std::pow(std::min(x, y) / hi, s), 1.0 / s);
  const double c = std::cos(kPi / (2.0 * ps.p()));
  const double sn = std::sin(kPi / (2.0 * ps.p()));
  return num / (2.0 * std::sqrt(alpha * alpha * c * c + beta * beta * sn * sn));
}

struct LimitRatio {
  double empirical;    // ||(|P+f|^s + |P-f|^s)^{1/s}||_p / ||f||_p on the grid
  double closed_form;  // closed_form_T(alpha, beta)
  double deviation;    // |empirical - closed_form| / closed_form
};

/// Projections by DFT truncation of the sampled family.
inline LimitRatio limit_ratio(const TestFamilyParams& tp, const ParamSpace& ps, std::size_t M) {
  const CircleGrid f = build_test_function(tp, M);
  const CircleGrid agg =
      fourier::s_aggregate(fourier::project_plus(f), fourier::project_minus(f), ps.s());
  const double f_norm = fourier::lp_norm(f, ps.p());
  if (!(f_norm >= fourier::kDegenerateFloor))
    throw DegenerateInput("limit_ratio: sampled test function vanishes");
  const double empirical = fourier::lp_norm(agg, ps.p()) / f_norm;
  const double closed = closed_form_T(tp.alpha, tp.beta, ps);
  return {empirical, closed, std::abs(empirical - closed) / closed};
}

inline double limit_ratio_check(const TestFamilyParams& tp, const ParamSpace& ps, std::size_t M) {
  return limit_ratio(tp, ps, M).deviation;
}

/// One rung of the refinement ladder toward a target angle: the angle gap and
/// 1 - rho halve and M doubles per step, keeping (1 - rho) M fixed.
struct Refinement {
  TestFamilyParams params;
  std::size_t grid_size;
};

inline Refinement refine(const TestFamilyParams& start, std::size_t M, double target_gamma,
                         unsigned step) {
  const double factor = std::ldexp(1.0, -static_cast<int>(step));
  TestFamilyParams tp = start;
  tp.gamma = target_gamma - (target_gamma - start.gamma) * factor;
  tp.rho = 1.0 - (1.0 - start.rho) * factor;
  tp.validate();
  return {tp, M << step};
}

}  // namespace riesz::testfam
