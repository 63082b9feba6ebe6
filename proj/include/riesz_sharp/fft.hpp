#pragma once

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <memory>
#include <mutex>
#include <new>
#include <span>
#include <vector>

#include "riesz_sharp/error.hpp"

namespace riesz::fft {

using cplx = std::complex<double>;

namespace detail {

// FFTW's planner keeps global state; only fftw_execute is reentrant.
inline std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(fftw_complex* p) const noexcept { fftw_free(p); }
};

struct PlanDestroy {
  void operator()(fftw_plan_s* p) const noexcept {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

inline std::vector<cplx> transform(std::span<const cplx> in, int sign) {
  const std::size_t n = in.size();
  riesz::detail::require(n > 0, "fft: empty input");
  std::unique_ptr<fftw_complex, FftwFree> buf(
      static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * n)));
  if (!buf) throw std::bad_alloc();

  std::unique_ptr<fftw_plan_s, PlanDestroy> plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_1d(static_cast<int>(n), buf.get(), buf.get(), sign,
                                FFTW_ESTIMATE));
  }
  auto* data = reinterpret_cast<cplx*>(buf.get());
  std::copy(in.begin(), in.end(), data);
  fftw_execute(plan.get());
  return {data, data + n};
}

}  // namespace detail

/// Unnormalized forward DFT: out[k] = sum_j in[j] e^{-2 pi i jk/n}.
inline std::vector<cplx> forward(std::span<const cplx> in) {
  return detail::transform(in, FFTW_FORWARD);
}

/// Unnormalized inverse DFT: out[j] = sum_k in[k] e^{+2 pi i jk/n}.
inline std::vector<cplx> backward(std::span<const cplx> in) {
  return detail::transform(in, FFTW_BACKWARD);
}

}  // namespace riesz::fft
