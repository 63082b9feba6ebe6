#pragma once

// Sub-mean-value test of the minorants on small circles inside complex lines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"
#include "riesz_sharp/minorants.hpp"

namespace riesz::minorants {

enum class Minorant { kPhi1, kPhi2 };

inline double evaluate(Minorant which, cplx z, cplx w, double p) {
  return which == Minorant::kPhi1 ? phi1(z, w, p) : phi2(z, w, p);
}

/// Allowed negative margin at a center: 1e-7 max(1, |z0|, |w0|)^p.
inline double psh_tolerance(cplx z0, cplx w0, double p) {
  return 1e-7 * std::pow(std::max({1.0, std::abs(z0), std::abs(w0)}), p);
}

/// n-point rectangle-rule mean of Phi(z0 + lambda a, w0 + lambda b) over
/// lambda = radius e^{i theta}, minus Phi(z0, w0).
inline double psh_line_test(Minorant which, cplx z0, cplx w0, cplx a, cplx b, double radius,
                            std::size_t n, double p) {
  riesz::detail::require(a != cplx{} || b != cplx{}, "psh_line_test: direction must be nonzero");
  riesz::detail::require(n >= 64, "psh_line_test: need n >= 64 samples");
  const double cap = 1e-2 * std::max({1.0, std::abs(z0), std::abs(w0)});
  riesz::detail::require(radius > 0.0 && radius <= cap,
                         "psh_line_test: radius must lie in (0, 1e-2 max(1, |z0|, |w0|)]");
  double acc = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const cplx lambda = std::polar(radius, theta);
    acc += evaluate(which, z0 + lambda * a, w0 + lambda * b, p);
  }
  return acc / static_cast<double>(n) - evaluate(which, z0, w0, p);
}

struct PshSuiteReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  double worst_scaled_margin = std::numeric_limits<double>::infinity();  // margin / tolerance
  cplx worst_z{}, worst_w{};

  bool pass() const { return failures == 0; }
};

struct PshSuiteOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 20240607;
  double radius = 1e-3;
  std::size_t samples = 1024;
  double center_box = 2.0;  // centers uniform in the polydisk of this radius
};

/// Random centers and unit directions from a fixed-seed stream.
inline PshSuiteReport psh_random_suite(Minorant which, double p, const PshSuiteOptions& opt = {}) {
  std::mt19937_64 rng(opt.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto disk_point = [&](double rad) {
    return std::polar(rad * std::sqrt(unit(rng)), 2.0 * kPi * unit(rng));
  };
  PshSuiteReport rep;
  for (std::size_t i = 0; i < opt.trials; ++i) {
    const cplx z0 = disk_point(opt.center_box);
    const cplx w0 = disk_point(opt.center_box);
    cplx a = disk_point(1.0), b = disk_point(1.0);
    const double len = std::hypot(std::abs(a), std::abs(b));
    if (len == 0.0) a = 1.0; else { a /= len; b /= len; }
    const double scale = std::max({1.0, std::abs(z0), std::abs(w0)});
    const double margin = psh_line_test(which, z0, w0, a, b, opt.radius * scale, opt.samples, p);
    const double tol = psh_tolerance(z0, w0, p);
    ++rep.trials;
    if (margin < -tol) ++rep.failures;
    const double scaled = margin / tol;
    if (scaled < rep.worst_scaled_margin) {
      rep.worst_scaled_margin = scaled;
      rep.worst_z = z0;
      rep.worst_w = w0;
    }
  }
  return rep;
}

}  // namespace riesz::minorants
