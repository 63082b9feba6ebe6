#pragma once

// Trigonometric polynomials on the unit circle, the Riesz projection and its
// complement, circle samples (optionally on a dilated circle), and L^p means by
// the rectangle rule.

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fft.hpp"

namespace riesz {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr std::size_t kDefaultGridSize = std::size_t{1} << 14;

/// Finitely supported two-sided Fourier series sum_{|n|<=N} c_n e^{in theta}.
class TrigPoly {
 public:
  TrigPoly() : coeffs_(1, cplx{}) {}

  explicit TrigPoly(std::size_t degree_bound)
      : degree_bound_(degree_bound), coeffs_(2 * degree_bound + 1, cplx{}) {}

  /// coeffs[k] is the coefficient of frequency k - N.
  TrigPoly(std::size_t degree_bound, std::vector<cplx> coeffs)
      : degree_bound_(degree_bound), coeffs_(std::move(coeffs)) {
    detail::require(coeffs_.size() == 2 * degree_bound_ + 1,
                    "TrigPoly: coefficient vector must have length 2N+1");
  }

  static TrigPoly from_map(const std::map<long, cplx>& terms) {
    long n_max = 0;
    for (const auto& [n, c] : terms) n_max = std::max(n_max, std::abs(n));
    TrigPoly f(static_cast<std::size_t>(n_max));
    for (const auto& [n, c] : terms) f.coeffs_[f.index(n)] = c;
    return f;
  }

  std::size_t degree_bound() const noexcept { return degree_bound_; }

  /// Largest |n| carrying a nonzero coefficient; -1 for the zero polynomial.
  long degree() const noexcept {
    for (std::size_t k = degree_bound_ + 1; k-- > 0;) {
      const long n = static_cast<long>(k);
      if (coeffs_[index(n)] != cplx{} || coeffs_[index(-n)] != cplx{}) return n;
    }
    return -1;
  }

  /// Coefficient of e^{in theta}; zero outside [-N, N].
  cplx operator[](long n) const noexcept {
    if (static_cast<std::size_t>(std::abs(n)) > degree_bound_) return {};
    return coeffs_[index(n)];
  }

  std::span<const cplx> coefficients() const noexcept { return coeffs_; }

  cplx evaluate(double theta) const {
    cplx acc{};
    const long N = static_cast<long>(degree_bound_);
    for (long n = -N; n <= N; ++n) acc += coeffs_[index(n)] * std::polar(1.0, n * theta);
    return acc;
  }

  /// Keeps the frequencies for which keep(n) holds.
  template <typename Pred>
  TrigPoly filter(Pred keep) const {
    TrigPoly out(degree_bound_);
    const long N = static_cast<long>(degree_bound_);
    for (long n = -N; n <= N; ++n)
      if (keep(n)) out.coeffs_[index(n)] = coeffs_[index(n)];
    return out;
  }

  friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly out(std::max(a.degree_bound_, b.degree_bound_));
    const long N = static_cast<long>(out.degree_bound_);
    for (long n = -N; n <= N; ++n) out.coeffs_[out.index(n)] = a[n] + b[n];
    return out;
  }

  friend TrigPoly operator*(cplx lambda, const TrigPoly& f) {
    TrigPoly out = f;
    for (auto& c : out.coeffs_) c *= lambda;
    return out;
  }

  friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
    return a + cplx{-1.0} * b;
  }

  /// Frequency-wise equality, ignoring differing degree bounds.
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    const long N = static_cast<long>(std::max(a.degree_bound_, b.degree_bound_));
    for (long n = -N; n <= N; ++n)
      if (a[n] != b[n]) return false;
    return true;
  }

 private:
  std::size_t index(long n) const noexcept {
    return static_cast<std::size_t>(n + static_cast<long>(degree_bound_));
  }

  std::size_t degree_bound_ = 0;
  std::vector<cplx> coeffs_;
};

/// Samples at theta_k = 2 pi k / M on the circle of the given radius.
class CircleGrid {
 public:
  CircleGrid(double radius, std::vector<cplx> samples)
      : radius_(radius), samples_(std::move(samples)) {
    detail::require(!samples_.empty() && std::has_single_bit(samples_.size()),
                    "CircleGrid: size must be a positive power of two");
    detail::require(radius_ > 0.0 && radius_ <= 1.0, "CircleGrid: radius must lie in (0, 1]");
  }

  std::size_t size() const noexcept { return samples_.size(); }
  double radius() const noexcept { return radius_; }
  std::span<const cplx> samples() const noexcept { return samples_; }
  cplx operator[](std::size_t k) const { return samples_[k]; }
  double angle(std::size_t k) const noexcept {
    return 2.0 * kPi * static_cast<double>(k) / static_cast<double>(samples_.size());
  }

 private:
  double radius_;
  std::vector<cplx> samples_;
};

/// Lebesgue exponent p and aggregation exponent s.
class ParamSpace {
 public:
  ParamSpace(double p, double s) : p_(p), s_(s) {
    detail::require(std::isfinite(p) && p > 1.0, "ParamSpace: p must be > 1");
    detail::require(std::isfinite(s) && s > 0.0, "ParamSpace: s must be > 0");
  }

  double p() const noexcept { return p_; }
  double s() const noexcept { return s_; }

  /// Hölder conjugate p/(p-1).
  double conjugate() const noexcept { return p_ / (p_ - 1.0); }

  bool analytic_regime() const noexcept { return p_ <= 2.0 && s_ >= p_; }
  bool dual_regime() const noexcept { return p_ >= 9.0 && s_ >= conjugate(); }
  bool trivial_regime() const noexcept { return s_ <= 1.0; }

  /// 1, 2 or 3 when a sharp constant is proven, 0 otherwise.
  int regime() const noexcept {
    if (trivial_regime()) return 3;
    if (analytic_regime()) return 1;
    if (dual_regime()) return 2;
    return 0;
  }

 private:
  double p_;
  double s_;
};

namespace fourier {

/// Keeps n >= 0. The constant term belongs to the analytic part.
inline TrigPoly project_plus(const TrigPoly& f) {
  return f.filter([](long n) { return n >= 0; });
}

/// Keeps n < 0, so that project_plus(f) + project_minus(f) == f.
inline TrigPoly project_minus(const TrigPoly& f) {
  return f.filter([](long n) { return n < 0; });
}

/// Samples of the harmonic extension f(rho e^{i theta}) = sum c_n rho^{|n|} e^{in theta}.
/// Frequencies beyond M/2 fold onto their aliases, which is still exact point
/// evaluation at the nodes.
inline CircleGrid sample(const TrigPoly& f, std::size_t M, double radius = 1.0) {
  riesz::detail::require(M > 0 && std::has_single_bit(M), "sample: M must be a power of two");
  riesz::detail::require(radius > 0.0 && radius <= 1.0, "sample: radius must lie in (0, 1]");
  std::vector<cplx> spectrum(M, cplx{});
  const long N = static_cast<long>(f.degree_bound());
  const long Ml = static_cast<long>(M);
  for (long n = -N; n <= N; ++n) {
    const cplx c = f[n];
    if (c == cplx{}) continue;
    const double damp = radius == 1.0 ? 1.0 : std::pow(radius, static_cast<double>(std::abs(n)));
    spectrum[static_cast<std::size_t>(((n % Ml) + Ml) % Ml)] += c * damp;
  }
  return CircleGrid(radius, fft::backward(spectrum));
}

/// DFT of the samples as a polynomial on that circle: frequencies -M/2 .. M/2-1
/// (the +M/2 slot stays zero).
inline TrigPoly analyze(const CircleGrid& g) {
  const std::size_t M = g.size();
  riesz::detail::require(M >= 2, "analyze: grid needs at least two samples");
  const auto spec = fft::forward(g.samples());
  const long half = static_cast<long>(M / 2);
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * half + 1), cplx{});
  const double scale = 1.0 / static_cast<double>(M);
  for (std::size_t k = 0; k < M; ++k) {
    const long n = static_cast<long>(k) < half ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(M);
    coeffs[static_cast<std::size_t>(n + half)] = spec[k] * scale;
  }
  return TrigPoly(static_cast<std::size_t>(half), std::move(coeffs));
}

namespace detail {

inline CircleGrid resynthesize(const TrigPoly& on_circle, std::size_t M, double radius) {
  CircleGrid g = sample(on_circle, M, 1.0);
  return CircleGrid(radius, std::vector<cplx>(g.samples().begin(), g.samples().end()));
}

}  // namespace detail

/// Analytic part of sampled data by DFT truncation (modes 0 .. M/2-1).
inline CircleGrid project_plus(const CircleGrid& g) {
  return detail::resynthesize(project_plus(analyze(g)), g.size(), g.radius());
}

/// Co-analytic part of sampled data by DFT truncation (modes -M/2 .. -1).
inline CircleGrid project_minus(const CircleGrid& g) {
  return detail::resynthesize(project_minus(analyze(g)), g.size(), g.radius());
}

/// (M^{-1} sum_k |g_k|^p)^{1/p}.
inline double lp_norm(const CircleGrid& g, double p) {
  riesz::detail::require(std::isfinite(p) && p > 0.0, "lp_norm: p must be > 0");
  double acc = 0.0;
  if (p == 2.0) {
    for (const cplx& v : g.samples()) acc += std::norm(v);
    return std::sqrt(acc / static_cast<double>(g.size()));
  }
  for (const cplx& v : g.samples()) acc += std::pow(std::abs(v), p);
  return std::pow(acc / static_cast<double>(g.size()), 1.0 / p);
}

/// Pointwise (|a_k|^s + |b_k|^s)^{1/s}.
inline CircleGrid s_aggregate(const CircleGrid& a, const CircleGrid& b, double s) {
  riesz::detail::require(a.size() == b.size() && a.radius() == b.radius(),
                         "s_aggregate: grids must share size and radius");
  riesz::detail::require(std::isfinite(s) && s > 0.0, "s_aggregate: s must be > 0");
  std::vector<cplx> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double x = std::abs(a[k]);
    const double y = std::abs(b[k]);
    const double hi = std::max(x, y);
    if (hi == 0.0) continue;
    // Factor out the larger modulus so large s does not overflow.
    const double lo = std::min(x, y) / hi;
    out[k] = hi * std::pow(1.0 + std::pow(lo, s), 1.0 / s);
  }
  return CircleGrid(a.radius(), std::move(out));
}

inline constexpr double kDegenerateFloor = 1e-300;

/// ||f||_p / ||(|P+f|^s + |P-f|^s)^{1/s}||_p on the size-M grid.
inline double reverse_ratio(const TrigPoly& f, const ParamSpace& ps,
                            std::size_t M = kDefaultGridSize) {
  riesz::detail::require(M > 0 && std::has_single_bit(M), "reverse_ratio: M must be a power of two");
  riesz::detail::require(f.degree() < static_cast<long>(M / 2),
                         "reverse_ratio: degree of f must be < M/2");
  const CircleGrid plus = sample(project_plus(f), M);
  const CircleGrid minus = sample(project_minus(f), M);
  const double denom = lp_norm(s_aggregate(plus, minus, ps.s()), ps.p());
  if (!(denom >= kDegenerateFloor))
    throw DegenerateInput("reverse_ratio: aggregate norm vanishes (f == 0)");
  return lp_norm(sample(f, M), ps.p()) / denom;
}

}  // namespace fourier
}  // namespace riesz
