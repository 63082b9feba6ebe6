#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

// Precondition violations (bad exponents, out-of-range points, mismatched grids).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// reverse_ratio on an input whose aggregate norm vanishes (f == 0).
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The analytic case label disagrees with what the root finder observes.
class ClassificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// (p, s) lies outside every proven regime. Carries the lower bound so callers
// can still report it.
class NoSharpConstant : public std::domain_error {
 public:
  NoSharpConstant(const std::string& what, double lower_bound)
      : std::domain_error(what), lower_bound_(lower_bound) {}

  double lower_bound() const noexcept { return lower_bound_; }

 private:
  double lower_bound_;
};

namespace detail {

inline void require(bool cond, const char* msg) {
  if (!cond) [[unlikely]] throw InvalidArgument(msg);
}

}  // namespace detail
}  // namespace riesz
