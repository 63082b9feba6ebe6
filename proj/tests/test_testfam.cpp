#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "riesz_sharp/constants.hpp"
#include "riesz_sharp/testfam.hpp"

using namespace riesz;
using testfam::TestFamilyParams;

TEST(GGamma, SpecExamples) {
  for (double g : {0.1, 0.7, 1.5}) EXPECT_NEAR(std::abs(testfam::eval_g_gamma(g, 0.0) - 1.0), 0.0, 1e-15);
  const cplx v = testfam::eval_g_gamma(kPi / 4, 0.5);
  EXPECT_NEAR(v.real(), std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(v.imag(), 0.0, 1e-15);
  EXPECT_THROW(testfam::eval_g_gamma(0.5, 1.0), InvalidArgument);
  EXPECT_THROW(testfam::eval_g_gamma(0.5, cplx(0, -1.2)), InvalidArgument);
}

TEST(GGamma, MatchesExpLogPower) {
  const cplx z(0.3, -0.6);
  const double g = 0.9;
  const cplx base = (1.0 + z) / (1.0 - z);
  const cplx want = std::polar(std::pow(std::abs(base), 2 * g / kPi), std::arg(base) * 2 * g / kPi);
  EXPECT_LT(std::abs(testfam::eval_g_gamma(g, z) - want), 1e-14);
}

TEST(GGamma, BoundaryArgumentIsGamma) {
  // Near the circle arg g -> +-gamma, so |Im g| = tan(gamma) |Re g|.
  const double rho = 1.0 - 1e-7;
  for (double g : {0.3, 0.8, 1.2})
    for (double th : {0.4, 1.5, 2.9, -0.7, -2.2}) {
      const cplx v = testfam::eval_g_gamma(g, std::polar(rho, th));
      EXPECT_NEAR(std::abs(v.imag()), std::tan(g) * std::abs(v.real()), 1e-3 * std::abs(v));
    }
}

TEST(BuildTestFunction, ReassemblyAndRealCase) {
  const TestFamilyParams both{1.0, 1.0, 0.6, 0.9};
  const CircleGrid g = testfam::build_test_function(both, 64);
  for (std::size_t k = 0; k < g.size(); ++k)
    EXPECT_LT(std::abs(g[k] - testfam::eval_g_gamma(0.6, std::polar(0.9, g.angle(k)))), 1e-14);
  const CircleGrid r = testfam::build_test_function({1.0, 0.0, 0.6, 0.9}, 64);
  for (std::size_t k = 0; k < r.size(); ++k) EXPECT_EQ(r[k].imag(), 0.0);
  const CircleGrid flat = testfam::build_test_function({2.5, 1.0, 1e-10, 0.5}, 64);
  for (std::size_t k = 0; k < flat.size(); ++k) EXPECT_NEAR(std::abs(flat[k] - 2.5), 0.0, 1e-9);
}

TEST(BuildTestFunction, RejectsBadParams) {
  EXPECT_THROW(testfam::build_test_function({0.0, 0.0, 0.5, 0.9}, 64), InvalidArgument);
  EXPECT_THROW(testfam::build_test_function({1.0, 0.0, kPi / 2, 0.9}, 64), InvalidArgument);
  EXPECT_THROW(testfam::build_test_function({1.0, 0.0, 0.5, 1.0}, 64), InvalidArgument);
  EXPECT_THROW(testfam::build_test_function({1.0, 0.0, 0.5, 0.9}, 48), InvalidArgument);
}

TEST(ClosedFormT, SpecExamples) {
  EXPECT_NEAR(testfam::closed_form_T(1.0, 0.0, ParamSpace(2.0, 2.0)), 1.0, 1e-15);
  // alpha = beta: the weights in the denominator sum to one for every p.
  for (double p : {1.2, 2.0, 5.0, 11.0})
    for (double s : {0.5, 1.5, 3.0}) EXPECT_NEAR(testfam::closed_form_T(1.0, 1.0, ParamSpace(p, s)), 1.0, 1e-14);
  EXPECT_THROW(testfam::closed_form_T(0.0, 0.0, ParamSpace(2.0, 2.0)), InvalidArgument);
}

TEST(ClosedFormT, MatchesOracleAndSymmetries) {
  for (double p : {1.1, 1.5, 3.0, 10.0})
    for (double s : {0.7, 1.3, 2.0, 6.0}) {
      const ParamSpace ps(p, s);
      for (auto [a, b] : {std::pair{1.0, 0.3}, {0.2, -1.7}, {3.0, 2.0}}) {
        const double t = testfam::closed_form_T(a, b, ps);
        EXPECT_NEAR(t, oracle::T(a, b, p, s), 1e-13 * t);
        EXPECT_NEAR(testfam::closed_form_T(-a, b, ps), t, 1e-13 * t);
        EXPECT_NEAR(testfam::closed_form_T(a, -b, ps), t, 1e-13 * t);
        EXPECT_NEAR(testfam::closed_form_T(-4.5 * a, -4.5 * b, ps), t, 1e-13 * t);
      }
    }
}

TEST(ClosedFormT, InfimumAgreesWithReducedObjective) {
  for (auto [p, s] : {std::pair{1.5, 1.5}, {1.5, 1.2}, {1.3, 0.8}, {2.0, 3.0}, {4.0, 2.0}, {10.0, 10.0 / 9.0}}) {
    const ParamSpace ps(p, s);
    const double via_constants = 1.0 / constants::lower_bound(ps).value;
    const double via_T = oracle::T_infimum_2d(p, s, 400000);
    EXPECT_NEAR(via_T, via_constants, 1e-8 * via_constants) << "p=" << p << " s=" << s;
  }
}

TEST(LimitRatio, ParsevalCaseIsExact) {
  const ParamSpace ps(2.0, 2.0);
  for (auto [a, b] : {std::pair{1.0, 0.0}, {1.0, 1.0}, {0.3, -2.0}}) {
    const auto lr = testfam::limit_ratio({a, b, kPi / 2 - 1e-3, 0.999}, ps, std::size_t{1} << 16);
    EXPECT_LT(lr.deviation, 1e-12);
  }
}

TEST(LimitRatio, EqualWeightsGiveOne) {
  const auto lr = testfam::limit_ratio({1.0, 1.0, kPi / 3 - 1e-3, 0.999}, ParamSpace(1.5, 1.5), std::size_t{1} << 16);
  EXPECT_NEAR(lr.empirical, 1.0, 1e-10);
  EXPECT_NEAR(lr.closed_form, 1.0, 1e-14);
}

TEST(LimitRatio, FarAngleIsFiniteAndPositive) {
  const ParamSpace ps(1.5, 1.5);
  const double dev = testfam::limit_ratio_check({0.0, 1.0, kPi / 6, 0.99}, ps, 4096);
  EXPECT_TRUE(std::isfinite(dev));
  EXPECT_GT(dev, 0.0);
}

TEST(LimitRatio, RefinementTrendImproves) {
  // Three refinements from a coarse start; deviation must shrink each time.
  const ParamSpace ps(10.0, 10.0 / 9.0);
  const TestFamilyParams start{1.0, 0.0, kPi / 10 - 4e-3, 0.996};
  double prev = 1e300;
  for (unsigned step = 0; step <= 3; ++step) {
    const auto r = testfam::refine(start, std::size_t{1} << 14, kPi / 10, step);
    const double dev = testfam::limit_ratio_check(r.params, ps, r.grid_size);
    EXPECT_LT(dev, prev) << "step " << step;
    prev = dev;
  }
  EXPECT_LT(prev, 2e-2);
}

TEST(Refine, ScheduleHalvesGapsAndDoublesGrid) {
  const TestFamilyParams start{1.0, 0.5, 0.5, 0.9};
  const auto r0 = testfam::refine(start, 1024, 0.7, 0);
  EXPECT_EQ(r0.grid_size, 1024u);
  EXPECT_DOUBLE_EQ(r0.params.gamma, 0.5);
  const auto r2 = testfam::refine(start, 1024, 0.7, 2);
  EXPECT_EQ(r2.grid_size, 4096u);
  EXPECT_NEAR(r2.params.gamma, 0.65, 1e-15);
  EXPECT_NEAR(r2.params.rho, 0.975, 1e-15);
  EXPECT_EQ(r2.params.alpha, 1.0);
  EXPECT_EQ(r2.params.beta, 0.5);
}
