#include "hysa/tracegen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace hysa {

std::string generate_video_csv(std::uint64_t seed, const BitrateLadder& ladder,
                               const VideoGenParams& p) {
  ladder.validate();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int m = ladder.count();
  const double gop_s = p.frame_duration_s * p.frames_per_gop;

  std::ostringstream out;
  out << "frame_index,arrival_time_s";
  for (int i = 0; i < m; ++i) out << ",size_bits_L" << i;
  out << "\n";

  // AR(1) in log space: right-skewed complexity, mostly below the coding rate
  // with occasional expensive spikes, as VBR encoders behave
  double log_c = 0.0;
  long frame = 0;
  for (long g = 0; g < p.gops; ++g) {
    double complexity = 1.0;
    if (p.complexity_sigma > 0) {
      if (g > 0) log_c = p.complexity_rho * log_c + p.complexity_sigma * gauss(rng);
      complexity = std::clamp(std::exp(p.complexity_log_mean + log_c), 0.4, 2.0);
    }
    std::vector<std::int64_t> totals(m);
    for (int lvl = 0; lvl < m; ++lvl) {
      double noise = p.level_noise_sigma > 0 ? p.level_noise_sigma * gauss(rng) : 0.0;
      double bits = ladder.levels_bps[lvl] * gop_s * complexity * (1.0 + noise);
      totals[lvl] = std::llround(std::max(bits, 1000.0));
      if (lvl > 0 && totals[lvl] <= totals[lvl - 1])
        totals[lvl] = totals[lvl - 1] + p.frames_per_gop; // keep per-GOP totals increasing
    }
    // I-frame three times the weight of the rest
    const long weight_sum = p.frames_per_gop + 2;
    for (int i = 0; i < p.frames_per_gop; ++i, ++frame) {
      out << frame << ',' << static_cast<double>(frame + 1) * p.frame_duration_s;
      for (int lvl = 0; lvl < m; ++lvl) {
        std::int64_t base = totals[lvl] / weight_sum;
        std::int64_t size = i == 0 ? totals[lvl] - base * (p.frames_per_gop - 1) : base;
        out << ',' << size;
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string generate_network_csv(std::uint64_t seed, const NetworkGenParams& p) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::ostringstream out;
  out << "time_s,bandwidth_bps\n";
  double bw = p.mean_bps;
  for (double t = 0; t < p.duration_s; t += p.step_s) {
    out << t << ',' << std::llround(std::clamp(bw, p.floor_bps, p.ceil_bps)) << "\n";
    bw = p.mean_bps + p.rho * (bw - p.mean_bps) + p.sigma_bps * gauss(rng);
  }
  return out.str();
}

SyntheticSuite generate_suite(std::uint64_t seed, const BitrateLadder& ladder) {
  SyntheticSuite suite;

  const double sigmas[] = {0.15, 0.40, 0.70};
  const char* names[] = {"video_low_var.csv", "video_med_var.csv", "video_high_var.csv"};
  for (int i = 0; i < 3; ++i) {
    VideoGenParams vp;
    vp.complexity_sigma = sigmas[i];
    suite.videos.push_back({names[i], generate_video_csv(seed + 100 + i, ladder, vp)});
  }
  VideoGenParams cbr;
  cbr.complexity_sigma = 0;
  cbr.level_noise_sigma = 0;
  suite.videos.push_back({"video_cbr.csv", generate_video_csv(seed + 199, ladder, cbr)});

  for (int j = 0; j < 12; ++j) {
    NetworkGenParams np;
    np.mean_bps = (0.8 + 1.7 * j / 11.0) * 1e6;
    np.sigma_bps = (0.1 + 1.8 * j / 11.0) * 1e6;
    char name[32];
    std::snprintf(name, sizeof(name), "net_%02d.csv", j);
    suite.networks.push_back({name, generate_network_csv(seed + 200 + j, np)});
  }
  return suite;
}

} // namespace hysa
