#include "hysa/qoe.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hysa {

namespace {
constexpr double kKbpsPerBps = 1e-3;
}

void QoeWeights::validate() const {
  if (p_q < 0 || p_r < 0 || p_l < 0 || p_s < 0 || p_w < 0 || p_d < 0)
    throw std::runtime_error("QoE weights must be non-negative");
}

QoeBreakdown& QoeBreakdown::operator+=(const QoeBreakdown& o) {
  quality += o.quality;
  rebuf += o.rebuf;
  latency += o.latency;
  skip += o.skip;
  switching += o.switching;
  return *this;
}

QoeBreakdown score_frame(const QoeWeights& w, const FrameOutcome& o, double frame_duration_s) {
  if (frame_duration_s <= 0) throw std::invalid_argument("frame duration must be positive");
  QoeBreakdown b;
  b.quality = w.p_q * o.coding_bitrate_bps * kKbpsPerBps * frame_duration_s;
  b.rebuf = -w.p_r * o.rebuffer_s;
  b.latency = -w.p_l * o.latency_s;
  b.skip = -w.p_s * o.skipped_s;
  b.switching = -w.p_w * std::abs(o.coding_bitrate_bps - o.prev_coding_bitrate_bps) * kKbpsPerBps;
  return b;
}

QoeBreakdown score_run(const QoeWeights& w, const SimulationLog& log) {
  if (log.frames.empty()) throw std::runtime_error("cannot score an empty log");
  QoeBreakdown total;
  double prev_bitrate = -1; // sentinel: first played frame has no switch penalty
  for (const auto& f : log.frames) {
    FrameOutcome o;
    if (f.skipped) {
      o.skipped_s = log.frame_duration_s;
    } else {
      o.coding_bitrate_bps = log.ladder_bps.at(f.level);
      o.rebuffer_s = f.rebuf_s;
      o.latency_s = f.latency_s;
      o.prev_coding_bitrate_bps = prev_bitrate < 0 ? o.coding_bitrate_bps : prev_bitrate;
      prev_bitrate = o.coding_bitrate_bps;
    }
    total += score_frame(w, o, log.frame_duration_s);
  }
  return total;
}

std::string SimulationLog::frames_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "frame,level,dl_start_s,dl_end_s,buffer_s,latency_s,rebuf_s,skipped\n";
  for (const auto& f : frames) {
    out << f.frame << ',' << f.level << ',' << f.dl_start_s << ',' << f.dl_end_s << ','
        << f.buffer_s << ',' << f.latency_s << ',' << f.rebuf_s << ',' << (f.skipped ? 1 : 0)
        << "\n";
  }
  return out.str();
}

std::string SimulationLog::segments_csv() const {
  std::ostringstream out;
  out.precision(12);
  out << "segment,quality,target_buffer,latency_limit_s,pred_bitrate_bps,est_T_s,est_D_s\n";
  for (const auto& s : segments) {
    out << s.segment << ',' << s.quality << ',' << s.target_buffer << ',' << s.latency_limit_s
        << ',' << s.pred_bitrate_bps << ',' << s.est_download_s << ',' << s.est_latency_s << "\n";
  }
  return out.str();
}

} // namespace hysa
