#include <doctest.h>

#include <random>

#include "hysa/framedrop.hpp"

using namespace hysa;

TEST_CASE("compute_skip_threshold: zero numerator and inverse proportionality") {
  QoeWeights w;
  w.p_q = 0;
  w.p_s = 0;
  CHECK(compute_skip_threshold(1.2e6, 0.04, w, 1.5) == 0.0);

  QoeWeights defaults;
  double base = compute_skip_threshold(1.2e6, 0.04, defaults, 1.5);
  CHECK(compute_skip_threshold(1.2e6, 0.04, defaults, 3.0) ==
        doctest::Approx(base / 2).epsilon(1e-12));
}

TEST_CASE("compute_skip_threshold: hand evaluation") {
  // V = 1200 kbps, p_q = 1, p_s = 1, d_f = 0.04, p_d = 12, lambda = 2
  QoeWeights w;
  w.p_q = 1;
  w.p_s = 1;
  w.p_d = 12;
  CHECK(compute_skip_threshold(1.2e6, 0.04, w, 2.0) ==
        doctest::Approx((1200.0 + 1.0) * 0.04 / 24.0).epsilon(1e-12)); // ~2.0017
}

TEST_CASE("compute_skip_threshold: disabled divisor is an error") {
  QoeWeights w;
  w.p_d = 0;
  CHECK_THROWS(compute_skip_threshold(1.2e6, 0.04, w, 1.5));
}

TEST_CASE("compute_skip_threshold: monotone in V, p_q, p_s") {
  QoeWeights w;
  double base = compute_skip_threshold(850e3, 0.04, w, 1.5);
  CHECK(compute_skip_threshold(1.2e6, 0.04, w, 1.5) > base);
  auto w2 = w;
  w2.p_q *= 2;
  CHECK(compute_skip_threshold(850e3, 0.04, w2, 1.5) >= base);
  auto w3 = w;
  w3.p_s += 1;
  CHECK(compute_skip_threshold(850e3, 0.04, w3, 1.5) >= base);
}

TEST_CASE("should_skip") {
  SkipPolicy policy{2.0};
  CHECK_FALSE(should_skip(0.0, policy));
  CHECK_FALSE(should_skip(2.0, policy));
  CHECK(should_skip(2.0 + 1e-9, policy));
}

TEST_CASE("break-even: skip gain equals skip cost at the threshold, N cancels") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.1, 5.0);
  for (int trial = 0; trial < 1000; ++trial) {
    QoeWeights w;
    w.p_q = unit(rng);
    w.p_s = unit(rng);
    w.p_d = unit(rng);
    double lambda = unit(rng);
    double v_bps = 2e5 + unit(rng) * 1e6;
    double d_f = 0.01 + unit(rng) * 0.02;
    double n = 1 + static_cast<double>(rng() % 500);
    double limit = compute_skip_threshold(v_bps, d_f, w, lambda);
    double qoe_no_skip = (w.p_q * v_bps * 1e-3 + w.p_s) * d_f * n;
    double qoe_skip_gain = w.p_d * lambda * limit * n;
    CHECK(qoe_skip_gain == doctest::Approx(qoe_no_skip).epsilon(1e-9));
  }
}
