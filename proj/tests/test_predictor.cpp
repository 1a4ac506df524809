#include <doctest.h>

#include <random>
#include <vector>

#include "hysa/predictor.hpp"

using namespace hysa;

TEST_CASE("scale_actual_bitrates: ratio scaling") {
  BitrateLadder two{{1e6, 2e6}};
  auto scaled = scale_actual_bitrates(two, 0, 1.1e6);
  CHECK(scaled[0] == 1.1e6); // observation kept exactly
  CHECK(scaled[1] == doctest::Approx(2.2e6).epsilon(1e-12));

  BitrateLadder four{{500e3, 850e3, 1200e3, 1850e3}};
  auto s4 = scale_actual_bitrates(four, 2, 1.5e6);
  CHECK(s4[0] == doctest::Approx(625e3).epsilon(1e-12));
  CHECK(s4[1] == doctest::Approx(1062.5e3).epsilon(1e-12));
  CHECK(s4[2] == 1.5e6);
  CHECK(s4[3] == doctest::Approx(2312.5e3).epsilon(1e-12));

  // strict ordering preserved
  for (size_t i = 0; i + 1 < s4.size(); ++i) CHECK(s4[i] < s4[i + 1]);
}

TEST_CASE("efficiency_ratio: boundary and hand cases") {
  std::vector<double> monotone{100, 105, 112};
  CHECK(efficiency_ratio(monotone) == 1.0);

  std::vector<double> alternating{100, 110, 100};
  CHECK(efficiency_ratio(alternating) == 0.0);

  std::vector<double> hand{100, 110, 105};
  CHECK(efficiency_ratio(hand) == doctest::Approx(1.0 / 3.0).epsilon(1e-12)); // 5 / 15

  std::vector<double> flat{42, 42, 42};
  CHECK(efficiency_ratio(flat) == 1.0); // zero path length

  std::vector<double> one{42};
  CHECK_THROWS(efficiency_ratio(one));
}

TEST_CASE("smoothing_factor: boundaries and hand value") {
  CHECK(smoothing_factor(0.0, 30, 2) == doctest::Approx(sc_slowest(30) * sc_slowest(30)).epsilon(1e-12));
  CHECK(smoothing_factor(1.0, 30, 2) == doctest::Approx(sc_fastest(2) * sc_fastest(2)).epsilon(1e-12));
  // (1/3 * (2/3 - 2/31) + 2/31)^2 = 5476/77841
  CHECK(smoothing_factor(1.0 / 3.0, 30, 2) == doctest::Approx(5476.0 / 77841.0).epsilon(1e-12));
}

TEST_CASE("kama_update: fixed point on a constant stream") {
  KamaState s;
  s.prediction = 1e6;
  s.n1 = 3;
  for (int i = 0; i < 20; ++i) CHECK(kama_update(s, 1e6) == 1e6);
}

TEST_CASE("kama_update: sc = 1 tracks the last sample") {
  KamaState s;       // l_min = 1 gives sc_fastest = 1; monotone history gives er = 1
  s.l_min = 1;
  s.n1 = 2;
  s.prediction = 0;
  kama_update(s, 100);
  kama_update(s, 110);
  double p = kama_update(s, 120);
  CHECK(p == doctest::Approx(120).epsilon(1e-12));
}

TEST_CASE("kama_update: step-by-step reference for 100,110,105") {
  KamaState s;
  s.l_max = 30;
  s.l_min = 2;
  s.n1 = 2;
  s.prediction = 100; // init to first sample
  kama_update(s, 100);
  CHECK(s.prediction == doctest::Approx(100).epsilon(1e-12));
  kama_update(s, 110);
  CHECK(s.prediction == doctest::Approx(940.0 / 9.0).epsilon(1e-12)); // sc = (2/3)^2 warm-up
  kama_update(s, 105);
  // er = 1/3, sc = 5476/77841, pred = 73197920/700569
  CHECK(s.prediction == doctest::Approx(73197920.0 / 700569.0).epsilon(1e-12));
}

TEST_CASE("kama properties over random histories") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> sample(1e5, 3e6);
  for (int trial = 0; trial < 2000; ++trial) {
    KamaState s;
    s.n1 = 1 + static_cast<int>(rng() % 8);
    s.l_min = 1 + static_cast<int>(rng() % 4);
    s.l_max = s.l_min + 1 + static_cast<int>(rng() % 40);
    s.prediction = sample(rng);
    for (int step = 0; step < 30; ++step) {
      double prev = s.prediction;
      double x = sample(rng);
      double next = kama_update(s, x);
      CHECK(next >= std::min(prev, x) - 1e-9);
      CHECK(next <= std::max(prev, x) + 1e-9);
      if (s.history.size() == static_cast<size_t>(s.n1 + 1)) {
        std::vector<double> window(s.history.begin(), s.history.end());
        double er = efficiency_ratio(window);
        CHECK(er >= 0.0);
        CHECK(er <= 1.0 + 1e-12);
        double sc = smoothing_factor(er, s.l_max, s.l_min);
        double lo = sc_slowest(s.l_max) * sc_slowest(s.l_max);
        double hi = sc_fastest(s.l_min) * sc_fastest(s.l_min);
        CHECK(sc >= lo - 1e-12);
        CHECK(sc <= hi + 1e-12);
      }
    }
  }
}

TEST_CASE("throughput estimator: WMA with linearly rising weights") {
  ThroughputEstimator est(5);
  CHECK(!est.estimate_bps().has_value()); // cold start

  est.add(2.5e6);
  CHECK(*est.estimate_bps() == 2.5e6);

  ThroughputEstimator constant(3);
  for (int i = 0; i < 3; ++i) constant.add(1e6);
  CHECK(*constant.estimate_bps() == doctest::Approx(1e6).epsilon(1e-12));

  ThroughputEstimator rising(3);
  rising.add(1e6);
  rising.add(2e6);
  rising.add(3e6);
  CHECK(*rising.estimate_bps() == doctest::Approx(14e6 / 6.0).epsilon(1e-12));
}

TEST_CASE("throughput estimator: window slides") {
  ThroughputEstimator est(2);
  est.add(9e6);
  est.add(1e6);
  est.add(1e6);
  CHECK(*est.estimate_bps() == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("prediction_error") {
  CHECK(prediction_error(1e6, 1e6) == 0.0);
  CHECK(prediction_error(1220, 1000) == doctest::Approx(0.22).epsilon(1e-12));
  CHECK(prediction_error(1258, 1000) == doctest::Approx(0.258).epsilon(1e-12));
  CHECK_THROWS(prediction_error(1.0, 0.0));
}

TEST_CASE("KamaPredictor: cold start at coding bitrates, convergence on CBR") {
  BitrateLadder ladder{{500e3, 850e3, 1200e3, 1850e3}};
  KamaPredictor p(ladder, 30, 2, 10);
  CHECK(p.predictions_bps() == ladder.levels_bps);
  for (int i = 0; i < 50; ++i) p.observe(i % 4, ladder.levels_bps[i % 4]);
  for (int m = 0; m < 4; ++m) CHECK(p.predictions_bps()[m] == ladder.levels_bps[m]);
}
