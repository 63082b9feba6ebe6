#pragma once

// Lower bounds for B_{p,s} from the near-extremal family: the one-variable
// reduced objective, the sign function Psi that drives its monotonicity, the
// four-way case split, and the closed forms of the proven regimes.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"

namespace riesz::constants {

/// Which square root of the reduced ratio: 1 + t^2 - 2t cos(pi/p) or 1 + t^2 + 2t cos(pi/p).
enum class Branch { kMinus, kPlus };

/// (1 + t^s)^{1/s} / sqrt(1 + t^2 -+ 2t cos(pi/p)), t in [0, 1].
inline double branch_objective(double t, const ParamSpace& ps, Branch branch) {
  detail::require(t >= 0.0 && t <= 1.0, "reduced_objective: t must lie in [0, 1]");
  const double c = std::cos(kPi / ps.p());
  const double sign = branch == Branch::kMinus ? -1.0 : 1.0;
  const double denom = 1.0 + t * t + sign * 2.0 * t * c;
  return std::pow(1.0 + std::pow(t, ps.s()), 1.0 / ps.s()) / std::sqrt(denom);
}

/// Minus-branch objective; for 1 < p <= 2 its infimum is the infimum of T.
inline double reduced_objective(double t, const ParamSpace& ps) {
  return branch_objective(t, ps, Branch::kMinus);
}

/// Psi(t) = t^{s-1} - t + cos(pi/p)(1 - t^s); shares its sign with G'(t).
inline double psi(double t, const ParamSpace& ps) {
  detail::require(t >= 0.0 && t <= 1.0, "psi: t must lie in [0, 1]");
  detail::require(t > 0.0 || ps.s() >= 1.0, "psi: t = 0 is singular for s < 1");
  const double s = ps.s();
  return std::pow(t, s - 1.0) - t + std::cos(kPi / ps.p()) * (1.0 - std::pow(t, s));
}

/// Case 4: s <= 1, minimum at t = 0. Cases 1, 2: minimum at t = 1.
/// Case 3: interior minimum at the unique zero of Psi.
inline int classify_case(const ParamSpace& ps) {
  detail::require(ps.p() <= 2.0, "classify_case: p must lie in (1, 2]");
  const double s = ps.s();
  if (s <= 1.0) return 4;
  if (s >= 2.0) return 2;
  // Sign of Psi'(1) = s - 2 - s cos(pi/p).
  return s - 2.0 - s * std::cos(kPi / ps.p()) >= 0.0 ? 1 : 3;
}

namespace search {

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
template <typename F>
double golden_max(F&& f, double lo, double hi, double tol) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > tol) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace search

/// Unique zero of Psi on (0, 1) in case 3. Psi rises to its maximum at t0 and
/// then falls to Psi(1) = 0, so the root is bracketed by [0, t0].
inline double find_t_tilde(const ParamSpace& ps) {
  if (classify_case(ps) != 3)
    throw ClassificationError("find_t_tilde: (p, s) is not in the interior-minimum case");
  auto f = [&](double t) { return psi(t, ps); };
  const double t0 = search::golden_max(f, 0.0, 1.0, 1e-12);
  if (!(f(t0) > 0.0))
    throw ClassificationError("find_t_tilde: max Psi <= 0, inconsistent with case 3");

  // Bisect to machine resolution; |Psi'| can be large near t = 0 when s is
  // close to 1, so a 1e-12 bracket alone would not pin the residual.
  double lo = 0.0, hi = t0;
  for (int it = 0; it < 2000; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (f(mid) > 0.0 ? hi : lo) = mid;
  }
  return std::abs(f(lo)) <= std::abs(f(hi)) ? lo : hi;
}

struct ConstantResult {
  double value = 1.0;                   // lower bound for B_{p,s}
  int case_label = 4;                   // 1..4
  std::optional<double> t_tilde;        // case 3 only
  double minimizer_t = 0.0;             // argmin of the reduced objective
  double effective_p = 2.0;             // p, or p/(p-1) when p > 2
};

struct LowerBoundOptions {
  std::size_t cross_check_points = 1'000'000;  // 0 disables the grid cross-check
  double cross_check_rel_tol = 1e-8;
};

struct GridMinimum {
  double value;
  double argmin;
};

/// Minimum over a uniform (intervals+1)-point grid on [0, 1] of the smaller branch at p.
inline GridMinimum grid_infimum(const ParamSpace& ps, std::size_t intervals) {
  detail::require(intervals >= 1, "grid_infimum: need at least one interval");
  GridMinimum best{std::numeric_limits<double>::infinity(), 0.0};
  const double h = 1.0 / static_cast<double>(intervals);
  // The smaller branch is the one whose square root carries +2t|cos(pi/p)|.
  const double c = std::abs(std::cos(kPi / ps.p()));
  const double s = ps.s();
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double t = i == intervals ? 1.0 : static_cast<double>(i) * h;
    const double v = std::pow(1.0 + std::pow(t, s), 1.0 / s) / std::sqrt(1.0 + t * t + 2.0 * t * c);
    if (v < best.value) best = {v, t};
  }
  return best;
}

/// (inf over t of the reduced objective)^{-1}. For p > 2, cos(pi/p) = -cos(pi/p')
/// swaps the branches, so the case machinery runs at p' = p/(p-1).
inline ConstantResult lower_bound(const ParamSpace& ps, const LowerBoundOptions& opt = {}) {
  const ParamSpace q = ps.p() <= 2.0 ? ps : ParamSpace(ps.conjugate(), ps.s());
  const double s = q.s();

  ConstantResult res;
  res.effective_p = q.p();
  res.case_label = classify_case(q);
  switch (res.case_label) {
    case 4:
      res.value = 1.0;
      res.minimizer_t = 0.0;
      break;
    case 1:
    case 2:
      res.value = std::pow(2.0, 1.0 - 1.0 / s) * std::sin(kPi / (2.0 * q.p()));
      res.minimizer_t = 1.0;
      break;
    default: {
      const double tt = find_t_tilde(q);
      res.t_tilde = tt;
      res.minimizer_t = tt;
      res.value = 1.0 / reduced_objective(tt, q);
      break;
    }
  }

  if (opt.cross_check_points > 0) {
    const GridMinimum gm = grid_infimum(ps, opt.cross_check_points);
    const double grid_value = 1.0 / gm.value;
    if (std::abs(grid_value - res.value) > opt.cross_check_rel_tol * res.value) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "lower_bound: case " << res.case_label << " value " << res.value
          << " disagrees with grid value " << grid_value << " at p=" << ps.p() << " s=" << ps.s();
      throw ClassificationError(msg.str());
    }
  }
  return res;
}

/// Sharp constant where proven: 2^{1-1/s} sin(pi/2p) for 1<p<=2, s>=p;
/// 2^{1-1/s} cos(pi/2p) for p>=9, s>=p/(p-1); 1 for s<=1.
inline double sharp_constant(const ParamSpace& ps) {
  const double p = ps.p(), s = ps.s();
  switch (ps.regime()) {
    case 3:
      return 1.0;
    case 1:
      return std::pow(2.0, 1.0 - 1.0 / s) * std::sin(kPi / (2.0 * p));
    case 2:
      return std::pow(2.0, 1.0 - 1.0 / s) * std::cos(kPi / (2.0 * p));
    default:
      break;
  }
  const double lb = lower_bound(ps, {.cross_check_points = 0}).value;
  std::ostringstream msg;
  msg << "no sharp constant proven for p=" << p << ", s=" << s;
  throw NoSharpConstant(msg.str(), lb);
}

/// How much a reported value is worth.
enum class Status { kSharp, kConjectured, kLowerBound };

/// Sharp inside a proven regime; conjectured when the endpoint closed form
/// applies but no proof covers (p, s); otherwise only a lower bound.
inline Status status(const ParamSpace& ps, const ConstantResult& r) {
  if (ps.regime() != 0) return Status::kSharp;
  if (r.case_label == 1 || r.case_label == 2) return Status::kConjectured;
  return Status::kLowerBound;
}

inline std::string to_string(Status st) {
  switch (st) {
    case Status::kSharp:
      return "sharp";
    case Status::kConjectured:
      return "conjectured";
    case Status::kLowerBound:
      return "lower-bound";
  }
  return "lower-bound";
}

}  // namespace riesz::constants
