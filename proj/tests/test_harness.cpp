#include <doctest.h>

#include <sstream>

#include "hysa/harness.hpp"
#include "hysa/tracegen.hpp"

using namespace hysa;

namespace {

VideoTrace parse_video_csv(const std::string& csv, const SchemeConfig& cfg) {
  std::istringstream in(csv);
  return parse_video_trace(in, cfg.frame_duration_s, cfg.gop_duration_s, cfg.ladder);
}

Observation obs_with(double buffer_s, double throughput_bps, int level = 0) {
  Observation o;
  o.segment = 0;
  o.level = level;
  o.actual_bitrate_bps = 500e3;
  o.measured_throughput_bps = throughput_bps;
  o.buffer_s = buffer_s;
  o.latency_s = 1.0;
  o.n_nst = 50;
  o.n_dld = 25;
  o.download_time_s = 1.0;
  return o;
}

} // namespace

TEST_CASE("emit_cdf: singleton, duplicates, monotone") {
  std::vector<double> one{3.5};
  auto cdf1 = emit_cdf(one);
  REQUIRE(cdf1.size() == 1);
  CHECK(cdf1[0] == std::pair{3.5, 1.0});

  std::vector<double> vals{1, 2, 2, 4};
  auto cdf = emit_cdf(vals);
  REQUIRE(cdf.size() == 3);
  CHECK(cdf[0] == std::pair{1.0, 0.25});
  CHECK(cdf[1] == std::pair{2.0, 0.75});
  CHECK(cdf[2] == std::pair{4.0, 1.0});

  for (size_t i = 1; i < cdf.size(); ++i) {
    CHECK(cdf[i].first > cdf[i - 1].first);
    CHECK(cdf[i].second > cdf[i - 1].second);
  }
  CHECK(cdf.back().second == 1.0);
}

TEST_CASE("lookahead: horizon-1 boundary behavior") {
  SchemeConfig cfg;
  cfg.lookahead_horizon = 1;
  LookaheadController abundant(cfg);
  abundant.decide(std::nullopt);
  CHECK(abundant.decide(obs_with(2.0, 1e9)).quality == cfg.ladder.count() - 1);

  SchemeConfig heavy = cfg;
  heavy.weights.p_r = 1e4;
  LookaheadController starved(heavy);
  starved.decide(std::nullopt);
  CHECK(starved.decide(obs_with(0.1, 2e5)).quality == 0);
}

TEST_CASE("lookahead: matches brute-force sequence enumeration (M=2, H=2)") {
  SchemeConfig cfg;
  cfg.ladder.levels_bps = {1e6, 2e6};
  cfg.lookahead_horizon = 2;

  auto oracle = [&](double buffer, double c, int prev_level) {
    const auto& w = cfg.weights;
    double best = -1e18;
    int best_first = 0;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) {
        int seq[2] = {a, b};
        double buf = buffer, prev = cfg.ladder.levels_bps[prev_level], score = 0;
        for (int v_lvl : seq) {
          double v = cfg.ladder.levels_bps[v_lvl];
          double t = v * 1.0 / c;
          double stall = std::max(t - buf / 1.0, 0.0);
          buf = std::max(buf - t, 0.0) + 1.0;
          score += w.p_q * v * 1e-3 - w.p_r * stall - w.p_w * std::abs(v - prev) * 1e-3;
          prev = v;
        }
        if (score > best || (score == best && a > best_first)) {
          best = score;
          best_first = a;
        }
      }
    return best_first;
  };

  // buffers/throughputs chosen so gamma stays 1.0 (buffer in [b_min1, b_max0))
  for (double buffer : {1.0, 1.4, 1.8, 2.2}) {
    for (double c : {4e5, 9e5, 1.4e6, 2.4e6, 6e6}) {
      LookaheadController controller(cfg);
      controller.decide(std::nullopt);
      auto dec = controller.decide(obs_with(buffer, c));
      CHECK(dec.quality == oracle(buffer, c, 0));
    }
  }
}

TEST_CASE("buffer-threshold: boundaries and scripted scenario") {
  SchemeConfig cfg;
  BufferThresholdController controller(cfg);
  controller.decide(std::nullopt);

  // hand-applied rule: level = highest m with B >= 1.5 * V_m * d / C_wma
  CHECK(controller.decide(obs_with(3.0, 2e6)).quality == 3);   // C=2.0M, th3=1.3875
  CHECK(controller.decide(obs_with(0.5, 1e6)).quality == 0);   // C=4/3M, th1=0.95625
  CHECK(controller.decide(obs_with(1.0, 1.5e6)).quality == 1); // C~1.4167M, th1=0.9
  CHECK(controller.decide(obs_with(2.0, 3e6)).quality == 3);   // C=2.05M, th3~1.3537
  CHECK(controller.decide(obs_with(0.0, 3e6)).quality == 0);   // empty buffer
}

TEST_CASE("run_matrix: FIXED(0) summary composes score_run, deterministic") {
  SchemeConfig cfg;
  cfg.frame_duration_s = 0.1;
  cfg.gop_duration_s = 1.0;
  cfg.ladder.levels_bps = {1e6, 2e6};
  VideoGenParams vp;
  vp.gops = 10;
  vp.frames_per_gop = 10;
  vp.frame_duration_s = 0.1;
  std::vector<NamedVideo> videos{
      {"v", parse_video_csv(generate_video_csv(3, cfg.ladder, vp), cfg)}};
  std::vector<NamedNetwork> nets{{"n", NetworkTrace{{{0.0, 3e6}}}}};
  std::vector<std::string> schemes{"FIXED(0)"};
  auto a = run_matrix(videos, nets, schemes, cfg);
  REQUIRE(a.size() == 1);

  auto controller = make_controller("FIXED(0)", cfg);
  auto log = run(videos[0].trace, nets[0].trace, cfg, *controller);
  auto expect = score_run(cfg.weights, log);
  CHECK(a[0].qoe.overall() == doctest::Approx(expect.overall()).epsilon(1e-12));

  auto b = run_matrix(videos, nets, schemes, cfg);
  CHECK(a[0].qoe.overall() == b[0].qoe.overall());
  CHECK(a[0].pred_error == b[0].pred_error);
}

TEST_CASE("tracegen: suite parses; CBR trace hits coding bitrates exactly") {
  SchemeConfig cfg;
  auto suite = generate_suite(7, cfg.ladder);
  REQUIRE(suite.videos.size() == 4);
  REQUIRE(suite.networks.size() == 12);
  for (const auto& v : suite.videos) CHECK_NOTHROW(parse_video_csv(v.csv, cfg));
  for (const auto& n : suite.networks) {
    std::istringstream in(n.csv);
    CHECK_NOTHROW(parse_network_trace(in));
  }
  auto cbr = parse_video_csv(suite.videos.back().csv, cfg);
  for (long g = 0; g < cbr.gop_count(); ++g)
    for (int m = 0; m < cfg.ladder.count(); ++m)
      CHECK(segment_actual_bitrate(cbr, g, m) == cfg.ladder.levels_bps[m]);
}

TEST_CASE("prediction_experiment: KAMA beats coding-bitrate prediction on VBR") {
  SchemeConfig cfg;
  VideoGenParams vp;
  vp.gops = 40;
  vp.complexity_sigma = 0.15;
  auto video = parse_video_csv(generate_video_csv(5, cfg.ladder, vp), cfg);
  auto errs = prediction_experiment(video, cfg);
  CHECK(errs.kama < errs.coding);
}

TEST_CASE("summary_csv and cdf_csv headers") {
  RunSummary s;
  s.video = "v";
  s.network = "n";
  s.scheme = "HYSA";
  auto csv = summary_csv({&s, 1});
  CHECK(csv.rfind("video,network,scheme,qoe_overall,", 0) == 0);
  std::vector<std::pair<double, double>> cdf{{1.0, 1.0}};
  CHECK(cdf_csv(cdf, "qoe_overall").rfind("qoe_overall,cumulative_fraction", 0) == 0);
}
