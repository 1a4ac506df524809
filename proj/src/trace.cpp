#include "hysa/trace.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hysa {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::stringstream ss(line);
  while (std::getline(ss, field, ',')) {
    // trim surrounding whitespace
    auto b = field.find_first_not_of(" \t\r");
    auto e = field.find_last_not_of(" \t\r");
    fields.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return fields;
}

double parse_double(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("malformed ") + what + ": '" + s + "'");
  }
}

std::int64_t parse_int64(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error(std::string("malformed ") + what + ": '" + s + "'");
  }
}

bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return true;
  }
  return false;
}

} // namespace

void BitrateLadder::validate() const {
  if (levels_bps.size() < 2) throw std::runtime_error("ladder needs at least 2 levels");
  for (size_t i = 0; i + 1 < levels_bps.size(); ++i) {
    if (!(levels_bps[i] < levels_bps[i + 1]))
      throw std::runtime_error("ladder bitrates must be strictly increasing");
  }
  if (levels_bps.front() <= 0) throw std::runtime_error("ladder bitrates must be positive");
}

int VideoTrace::frames_per_gop() const {
  double ratio = gop_duration_s / frame_duration_s;
  int n = static_cast<int>(std::lround(ratio));
  if (n < 1 || std::abs(ratio - n) > 1e-9)
    throw std::runtime_error("gop duration must be an integer multiple of frame duration");
  return n;
}

long VideoTrace::gop_count() const { return frame_count() / frames_per_gop(); }

void VideoTrace::validate() const {
  ladder.validate();
  int fpg = frames_per_gop();
  if (frames.empty()) throw std::runtime_error("video trace has no frames");
  if (frames.size() % fpg != 0)
    throw std::runtime_error("incomplete final GOP (frame count not a multiple of GOP length)");
  const size_t m = ladder.levels_bps.size();
  double prev_arrival = -1;
  for (const auto& f : frames) {
    if (f.sizes_bits.size() != m) throw std::runtime_error("level-count mismatch in frame row");
    for (auto s : f.sizes_bits)
      if (s <= 0) throw std::runtime_error("frame sizes must be positive");
    if (f.arrival_time_s < prev_arrival) throw std::runtime_error("non-monotone arrival");
    prev_arrival = f.arrival_time_s;
  }
  // per-GOP totals must be strictly increasing across levels
  for (long g = 0; g < gop_count(); ++g) {
    for (size_t lvl = 0; lvl + 1 < m; ++lvl) {
      if (!(segment_actual_bitrate(*this, g, static_cast<int>(lvl)) <
            segment_actual_bitrate(*this, g, static_cast<int>(lvl) + 1)))
        throw std::runtime_error("per-GOP total sizes must increase across quality levels");
    }
  }
}

void NetworkTrace::validate() const {
  if (samples.empty()) throw std::runtime_error("empty network trace");
  if (samples.front().first != 0.0) throw std::runtime_error("trace must start at time 0");
  double prev = -1;
  for (const auto& [t, bw] : samples) {
    if (t <= prev) throw std::runtime_error("network trace timestamps must be strictly increasing");
    if (bw <= 0) throw std::runtime_error("bandwidth must be positive");
    prev = t;
  }
}

double NetworkTrace::bandwidth_at(double t) const {
  auto it = std::upper_bound(samples.begin(), samples.end(), t,
                             [](double v, const auto& s) { return v < s.first; });
  if (it == samples.begin()) return samples.front().second;
  return std::prev(it)->second;
}

VideoTrace parse_video_trace(std::istream& in, double frame_duration_s,
                             double gop_duration_s, const BitrateLadder& ladder) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("empty video trace");
  auto header = split_csv_line(line);
  if (header.size() < 3 || header[0] != "frame_index" || header[1] != "arrival_time_s")
    throw std::runtime_error("bad video trace header");
  const size_t m = header.size() - 2;
  for (size_t i = 0; i < m; ++i) {
    if (header[2 + i] != "size_bits_L" + std::to_string(i))
      throw std::runtime_error("bad video trace header: expected size_bits_L" + std::to_string(i));
  }
  if (static_cast<int>(m) != ladder.count())
    throw std::runtime_error("level-count mismatch between trace header and ladder");

  VideoTrace trace;
  trace.frame_duration_s = frame_duration_s;
  trace.gop_duration_s = gop_duration_s;
  trace.ladder = ladder;
  while (next_line(in, line)) {
    auto fields = split_csv_line(line);
    if (fields.size() != header.size())
      throw std::runtime_error("malformed row: wrong field count");
    FrameRecord f;
    f.index = parse_int64(fields[0], "frame_index");
    f.arrival_time_s = parse_double(fields[1], "arrival_time_s");
    for (size_t i = 0; i < m; ++i) f.sizes_bits.push_back(parse_int64(fields[2 + i], "size_bits"));
    if (f.index != static_cast<long>(trace.frames.size()))
      throw std::runtime_error("frame indices must be consecutive from 0");
    trace.frames.push_back(std::move(f));
  }
  trace.validate();
  return trace;
}

NetworkTrace parse_network_trace(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw std::runtime_error("empty network trace");
  auto header = split_csv_line(line);
  if (header.size() != 2 || header[0] != "time_s" || header[1] != "bandwidth_bps")
    throw std::runtime_error("bad network trace header");
  NetworkTrace trace;
  while (next_line(in, line)) {
    auto fields = split_csv_line(line);
    if (fields.size() != 2) throw std::runtime_error("malformed row: wrong field count");
    trace.samples.emplace_back(parse_double(fields[0], "time_s"),
                               parse_double(fields[1], "bandwidth_bps"));
  }
  trace.validate();
  return trace;
}

std::string serialize_video_trace(const VideoTrace& trace) {
  std::ostringstream out;
  out << "frame_index,arrival_time_s";
  for (int i = 0; i < trace.ladder.count(); ++i) out << ",size_bits_L" << i;
  out << "\n";
  out.precision(17);
  for (const auto& f : trace.frames) {
    out << f.index << ',' << f.arrival_time_s;
    for (auto s : f.sizes_bits) out << ',' << s;
    out << "\n";
  }
  return out.str();
}

std::string serialize_network_trace(const NetworkTrace& trace) {
  std::ostringstream out;
  out << "time_s,bandwidth_bps\n";
  out.precision(17);
  for (const auto& [t, bw] : trace.samples) out << t << ',' << bw << "\n";
  return out.str();
}

double segment_actual_bitrate(const VideoTrace& trace, long segment, int level) {
  int fpg = trace.frames_per_gop();
  if (segment < 0 || segment >= trace.gop_count()) throw std::out_of_range("segment out of range");
  if (level < 0 || level >= trace.ladder.count()) throw std::out_of_range("level out of range");
  double total = 0;
  for (long i = segment * fpg; i < (segment + 1) * fpg; ++i)
    total += static_cast<double>(trace.frames[i].sizes_bits[level]);
  return total / trace.gop_duration_s;
}

double transfer_time(const NetworkTrace& net, double start_s, double size_bits) {
  if (size_bits <= 0) return 0;
  double t = start_s;
  double remaining = size_bits;
  auto it = std::upper_bound(net.samples.begin(), net.samples.end(), t,
                             [](double v, const auto& s) { return v < s.first; });
  if (it != net.samples.begin()) --it;
  for (;; ++it) {
    double bw = it->second;
    auto next = std::next(it);
    if (next == net.samples.end()) return t - start_s + remaining / bw;
    double span = next->first - t;
    double capacity = bw * span;
    if (remaining <= capacity) return t - start_s + remaining / bw;
    remaining -= capacity;
    t = next->first;
  }
}

} // namespace hysa
