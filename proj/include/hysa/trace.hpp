#ifndef HYSA_TRACE_HPP
#define HYSA_TRACE_HPP

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace hysa {

// Coding bitrates of the encoding ladder, strictly increasing, at least two levels.
struct BitrateLadder {
  std::vector<double> levels_bps;

  int count() const { return static_cast<int>(levels_bps.size()); }
  void validate() const;
};

struct FrameRecord {
  long index = 0;
  double arrival_time_s = 0;            // time the frame becomes available at the CDN
  std::vector<std::int64_t> sizes_bits; // one size per quality level
};

// Per-frame content trace. Frames are grouped positionally into complete GOPs
// of gop_duration_s / frame_duration_s frames each.
struct VideoTrace {
  double frame_duration_s = 0.04;
  double gop_duration_s = 1.0;
  BitrateLadder ladder;
  std::vector<FrameRecord> frames;

  int frames_per_gop() const;
  long gop_count() const;
  long frame_count() const { return static_cast<long>(frames.size()); }
  double duration_s() const { return static_cast<double>(frames.size()) * frame_duration_s; }
  void validate() const;
};

// Piecewise-constant downlink bandwidth. The last sample extends to infinity,
// so bandwidth_at is total over t >= 0.
struct NetworkTrace {
  std::vector<std::pair<double, double>> samples; // (start_time_s, bandwidth_bps)

  double bandwidth_at(double t) const;
  void validate() const;
};

// CSV header: frame_index,arrival_time_s,size_bits_L0,...,size_bits_L{M-1}
// M is inferred from the header and must match the ladder.
VideoTrace parse_video_trace(std::istream& in, double frame_duration_s,
                             double gop_duration_s, const BitrateLadder& ladder);

// CSV header: time_s,bandwidth_bps
NetworkTrace parse_network_trace(std::istream& in);

std::string serialize_video_trace(const VideoTrace& trace);
std::string serialize_network_trace(const NetworkTrace& trace);

// Actual bitrate R of GOP `segment` at quality `level`: summed frame sizes / GOP duration.
double segment_actual_bitrate(const VideoTrace& trace, long segment, int level);

// Wall time needed to transfer `size_bits` starting at `start_s`, integrating
// across the piecewise-constant bandwidth steps exactly.
double transfer_time(const NetworkTrace& net, double start_s, double size_bits);

} // namespace hysa

#endif
