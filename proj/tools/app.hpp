#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace riesz::cli {

enum class Command { kConstant, kRatio, kVerify, kSweep, kPshTest };
enum class Format { kJson, kCsv, kText };

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  Command command = Command::kConstant;
  double p = 2.0;
  std::optional<double> s;
  std::size_t n_r = 2000, n_t = 2000;  // --grid NxM; a single M sets both
  bool grid_given = false;
  double tolerance = 1e-9;
  std::uint64_t seed = 20240607;
  Format format = Format::kJson;
  std::optional<std::string> output_path;
  bool timing = false;

  std::string ineq = "eq3";  // verify

  // ratio: test family unless degree is set, then a random polynomial
  double alpha = 1.0, beta = 0.0;
  std::optional<double> gamma;
  double rho = 0.999;
  std::optional<int> degree;

  // sweep lattice
  double p_min = 1.1, p_max = 2.0, p_step = 0.1;
  double s_min = 1.0, s_max = 2.0, s_step = 0.1;
  bool s_equals_p = false;

  // psh-test
  std::string which = "phi1";
  std::size_t trials = 1000;
  double radius = 1e-3;
  std::size_t samples = 1024;
};

/// Parses argv-style arguments (without the program name) and runs one
/// command. Reports go to out (or --output), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace riesz::cli
