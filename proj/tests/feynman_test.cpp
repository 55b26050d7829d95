#include "corr/feynman.hpp"

#include <gtest/gtest.h>

#include "corr/closed_form.hpp"

using namespace corr;

TEST(Feynman, WeightOneExact) {
  MCResult r = feynman_correlator({Cplx(0, 0), Cplx(3, 4)}, {});
  EXPECT_DOUBLE_EQ(r.value, std::log(5.0));
  EXPECT_EQ(r.sigma, 0.0);
}

TEST(Feynman, Deterministic) {
  IntegrationConfig cfg;
  cfg.samples = 50000;
  cfg.seed = 77;
  std::vector<Cplx> zs = {{0, 0}, {1, 0}, {0.3, 0.7}};
  MCResult a = feynman_correlator(zs, cfg);
  MCResult b = feynman_correlator(zs, cfg);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.sigma, b.sigma);
}

// Calibration anchor: the frozen normalization s_n 2^{a_n} (8 pi)^{-(n-1)}
// binom(2n-2, n-1)^{-1} with s_n = -1, a_n = 5(n-1) must reproduce the
// weight-2 closed form.
TEST(Feynman, CalibrationWeightTwo) {
  std::vector<std::vector<Cplx>> cfgs = {
      {{0, 0}, {1, 0}, {0.3, 0.7}},
      {{0.2, -0.1}, {1.1, 0.4}, {-0.5, 0.8}},
      {{0, 0}, {2, 0}, {1, 1}},
  };
  IntegrationConfig cfg;
  cfg.samples = 400000;
  cfg.radius_factor = 2;
  cfg.seed = 2024;
  for (auto& zs : cfgs) {
    MCResult r = feynman_correlator(zs, cfg);
    double target = correlator_closed(zs);
    EXPECT_LT(std::abs(r.value - target), 4 * r.sigma) << "target " << target << " got "
                                                       << r.value << " sigma " << r.sigma;
  }
}

TEST(Feynman, CalibrationWeightThree) {
  IntegrationConfig cfg;
  cfg.samples = 1500000;
  cfg.radius_factor = 2;
  cfg.seed = 31;
  for (Cplx z : {Cplx(0.4, 0.3), Cplx(-0.7, 0.5)}) {
    std::vector<Cplx> zs = {Cplx(1, 0), Cplx(0, 0), Cplx(0, 0), z};
    MCResult r = feynman_correlator(zs, cfg);
    double target = correlator_closed(zs);
    EXPECT_LT(std::abs(r.value - target), 4 * r.sigma) << "target " << target << " got "
                                                       << r.value << " sigma " << r.sigma;
  }
}

// The sampling radius is an importance parameter, not a domain truncation:
// doubling it must not shift the estimate beyond combined noise.
TEST(Feynman, RadiusFactorOnlyAffectsVariance) {
  std::vector<Cplx> zs = {{0, 0}, {1, 0}, {0.3, 0.7}};
  IntegrationConfig a, b;
  a.samples = b.samples = 400000;
  a.seed = 1;
  b.seed = 2;
  a.radius_factor = 2;
  b.radius_factor = 4;
  MCResult ra = feynman_correlator(zs, a);
  MCResult rb = feynman_correlator(zs, b);
  double comb = std::sqrt(ra.sigma * ra.sigma + rb.sigma * rb.sigma);
  EXPECT_LT(std::abs(ra.value - rb.value), 4 * comb);
}
