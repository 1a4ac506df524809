#ifndef HYSA_TRACEGEN_HPP
#define HYSA_TRACEGEN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hysa/trace.hpp"

namespace hysa {

struct VideoGenParams {
  long gops = 60;
  int frames_per_gop = 25;
  double frame_duration_s = 0.04;
  // AR(1) per-GOP complexity in log space; sigma 0 produces an exactly
  // constant-bitrate trace
  double complexity_sigma = 0.15;
  double complexity_rho = 0.9;
  double complexity_log_mean = -0.5;
  double level_noise_sigma = 0.02;
};

std::string generate_video_csv(std::uint64_t seed, const BitrateLadder& ladder,
                               const VideoGenParams& params);

struct NetworkGenParams {
  double duration_s = 600;
  double step_s = 2.0;
  double mean_bps = 1.5e6;
  double sigma_bps = 0.5e6;
  double rho = 0.8;
  double floor_bps = 1.5e5;
  double ceil_bps = 8e6;
};

std::string generate_network_csv(std::uint64_t seed, const NetworkGenParams& params);

struct GeneratedFile {
  std::string name;
  std::string csv;
};

struct SyntheticSuite {
  std::vector<GeneratedFile> videos;   // three VBR variance tiers plus one CBR
  std::vector<GeneratedFile> networks; // means 0.8-2.5 Mbps, spread of variances
};

SyntheticSuite generate_suite(std::uint64_t seed, const BitrateLadder& ladder);

} // namespace hysa

#endif
