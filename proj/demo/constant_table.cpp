// Prints the lower bound for B_{p,s} on a small (p, s) lattice together with
// the test-family ratio that approaches it.

#include <cstdio>

#include "riesz_sharp/riesz_sharp.hpp"

int main() {
  using namespace riesz;
  std::printf("%6s %6s %12s %4s %-12s %12s\n", "p", "s", "bound", "case", "status", "family");
  for (double p : {1.25, 1.5, 2.0, 4.0, 10.0}) {
    for (double s : {0.5, 1.5, 2.0, 3.0}) {
      const ParamSpace ps(p, s);
      const auto lb = constants::lower_bound(ps, {.cross_check_points = 0});
      // Reciprocal of the family limit at the extremal weights: (0, 1) for
      // p <= 2, (1, 0) above. Matches the bound where that is sharp.
      const double fam = 1.0 / testfam::closed_form_T(p <= 2.0 ? 0.0 : 1.0, p <= 2.0 ? 1.0 : 0.0, ps);
      std::printf("%6.3g %6.3g %12.9f %4d %-12s %12.9f\n", p, s, lb.value, lb.case_label,
                  constants::to_string(constants::status(ps, lb)).c_str(), fam);
    }
  }
}
