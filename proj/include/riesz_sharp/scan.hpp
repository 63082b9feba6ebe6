#pragma once

// Grid maximization of gap functions over rectangles, split into row bands
// across threads. The reduction keeps the lowest (row, column) index among
// ties, so reports do not depend on the thread count.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "riesz_sharp/error.hpp"
#include "riesz_sharp/fourier.hpp"
#include "riesz_sharp/minorants.hpp"

namespace riesz::minorants {

struct Rectangle {
  double r_lo, r_hi, t_lo, t_hi;
};

struct ScanReport {
  Rectangle rectangle{};
  std::size_t n_r = 0, n_t = 0;
  double max_gap = -std::numeric_limits<double>::infinity();
  double argmax_r = 0.0, argmax_t = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

enum class Field { kLemma31Reduced, kLemma32Reduced };

inline std::string to_string(Field f) {
  return f == Field::kLemma31Reduced ? "lemma31-reduced" : "lemma32-reduced";
}

/// Worker count: hardware concurrency, capped by RIESZ_SHARP_THREADS when set.
inline unsigned scan_threads() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("RIESZ_SHARP_THREADS")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

namespace detail {

struct Best {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t i = 0, j = 0;
  bool found = false;
};

// NaN never wins, so a NaN node cannot be reported as the maximum; it is
// counted separately by the caller through the returned flag.
template <typename Node>
Best reduce_rows(const Node& node, std::size_t row_begin, std::size_t row_end, std::size_t cols,
                 bool& saw_nan) {
  Best b;
  for (std::size_t i = row_begin; i < row_end; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const double v = node(i, j);
      if (std::isnan(v)) {
        saw_nan = true;
        continue;
      }
      if (!b.found || v > b.value) b = {v, i, j, true};
    }
  return b;
}

template <typename Node>
Best parallel_max(const Node& node, std::size_t rows, std::size_t cols, bool& saw_nan) {
  const std::size_t workers = std::min<std::size_t>(scan_threads(), rows);
  std::vector<Best> bands(workers);
  std::vector<char> nan_flags(workers, 0);
  auto run = [&](std::size_t w) {
    const std::size_t lo = rows * w / workers, hi = rows * (w + 1) / workers;
    bool nan = false;
    bands[w] = reduce_rows(node, lo, hi, cols, nan);
    nan_flags[w] = nan;
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
    for (auto& t : pool) t.join();
  }
  // Bands are in increasing row order; strict > keeps the earliest on ties.
  Best best;
  for (std::size_t w = 0; w < workers; ++w) {
    if (nan_flags[w]) saw_nan = true;
    if (bands[w].found && (!best.found || bands[w].value > best.value)) best = bands[w];
  }
  return best;
}

}  // namespace detail

/// Maximum of gap(r, t) at the cell centers of an n_r x n_t grid on the rectangle.
/// A NaN anywhere fails the report.
inline ScanReport scan_rectangle(const std::function<double(double, double)>& gap, Rectangle rect,
                                 std::size_t n_r, std::size_t n_t, double tolerance) {
  riesz::detail::require(n_r >= 2 && n_t >= 2, "scan: resolution must be at least 2x2");
  riesz::detail::require(rect.r_lo < rect.r_hi && rect.t_lo < rect.t_hi, "scan: empty rectangle");
  const double dr = (rect.r_hi - rect.r_lo) / static_cast<double>(n_r);
  const double dt = (rect.t_hi - rect.t_lo) / static_cast<double>(n_t);
  auto r_at = [&](std::size_t i) { return rect.r_lo + (static_cast<double>(i) + 0.5) * dr; };
  auto t_at = [&](std::size_t j) { return rect.t_lo + (static_cast<double>(j) + 0.5) * dt; };
  auto node = [&](std::size_t i, std::size_t j) { return gap(r_at(i), t_at(j)); };

  bool saw_nan = false;
  const detail::Best b = detail::parallel_max(node, n_r, n_t, saw_nan);
  ScanReport rep;
  rep.rectangle = rect;
  rep.n_r = n_r;
  rep.n_t = n_t;
  rep.tolerance = tolerance;
  if (saw_nan || !b.found) {
    rep.max_gap = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.max_gap = b.value;
  rep.argmax_r = r_at(b.i);
  rep.argmax_t = t_at(b.j);
  rep.pass = rep.max_gap <= tolerance;
  return rep;
}

/// Maximum of gap(x) at n endpoint-inclusive nodes of [lo, hi]; reported with
/// n_t = 1 and t fixed at 0.
inline ScanReport scan_interval(const std::function<double(double)>& gap, double lo, double hi,
                                std::size_t n, double tolerance) {
  riesz::detail::require(n >= 2, "scan: resolution must be at least 2 points");
  riesz::detail::require(lo < hi, "scan: empty interval");
  auto x_at = [&](std::size_t i) {
    return i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  auto node = [&](std::size_t i, std::size_t) { return gap(x_at(i)); };
  bool saw_nan = false;
  const detail::Best b = detail::parallel_max(node, n, 1, saw_nan);
  ScanReport rep;
  rep.rectangle = {lo, hi, 0.0, 0.0};
  rep.n_r = n;
  rep.n_t = 1;
  rep.tolerance = tolerance;
  if (saw_nan || !b.found) {
    rep.max_gap = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  rep.max_gap = b.value;
  rep.argmax_r = x_at(b.i);
  rep.pass = rep.max_gap <= tolerance;
  return rep;
}

inline Rectangle canonical_rectangle(Field field) {
  return field == Field::kLemma31Reduced ? Rectangle{0.0, 1.0, 0.0, kPi}
                                         : Rectangle{0.0, 1.0, 0.0, 2.0 * kPi};
}

/// Scan of the reduced (3) or (4) gap on its canonical rectangle. For (4) the
/// exponent s of ps is ignored; the inequality fixes s = p/(p-1).
inline ScanReport scan(Field field, const ParamSpace& ps, std::size_t n_r, std::size_t n_t,
                       double tolerance) {
  const Rectangle rect = canonical_rectangle(field);
  if (field == Field::kLemma31Reduced) {
    riesz::detail::require(ps.p() <= 2.0, "scan lemma31-reduced: p must lie in (1, 2]");
    return scan_rectangle([&ps](double r, double t) { return reduced_phi3({r, t}, ps); }, rect, n_r,
                          n_t, tolerance);
  }
  riesz::detail::require(ps.p() >= 2.0, "scan lemma32-reduced: p must be >= 2");
  const double p = ps.p();
  return scan_rectangle([p](double r, double t) { return reduced_phi4({r, t}, p); }, rect, n_r, n_t,
                        tolerance);
}

}  // namespace riesz::minorants
