#include "hysa/harness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hysa/simulator.hpp"

namespace hysa {

RunSummary summarize_run(const std::string& video_name, const std::string& network_name,
                         const std::string& scheme, const SimulationLog& log,
                         const QoeWeights& weights) {
  RunSummary s;
  s.video = video_name;
  s.network = network_name;
  s.scheme = scheme;
  s.qoe = score_run(weights, log);
  double err = 0;
  for (const auto& [pred, actual] : log.predictions) err += prediction_error(pred, actual);
  s.pred_error = log.predictions.empty() ? 0 : err / static_cast<double>(log.predictions.size());
  s.stalls = log.stall_events;
  s.skips = log.skip_events;
  return s;
}

std::vector<RunSummary> run_matrix(std::span<const NamedVideo> videos,
                                   std::span<const NamedNetwork> networks,
                                   std::span<const std::string> schemes,
                                   const SchemeConfig& cfg) {
  if (videos.empty() || networks.empty() || schemes.empty())
    throw std::invalid_argument("run_matrix needs non-empty videos, networks and schemes");
  std::vector<RunSummary> out;
  for (const auto& v : videos) {
    for (const auto& n : networks) {
      for (const auto& scheme : schemes) {
        try {
          auto controller = make_controller(scheme, cfg);
          auto log = run(v.trace, n.trace, cfg, *controller);
          out.push_back(summarize_run(v.name, n.name, scheme, log, cfg.weights));
        } catch (const std::exception& e) {
          throw std::runtime_error("run failed for (" + v.name + ", " + n.name + ", " + scheme +
                                   "): " + e.what());
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<double, double>> emit_cdf(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("emit_cdf needs at least one value");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::pair<double, double>> cdf;
  const double total = static_cast<double>(sorted.size());
  size_t i = 0;
  while (i < sorted.size()) {
    size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    cdf.emplace_back(sorted[i], static_cast<double>(j) / total);
    i = j;
  }
  return cdf;
}

std::string summary_csv(std::span<const RunSummary> summaries) {
  std::ostringstream out;
  out.precision(12);
  out << "video,network,scheme,qoe_overall,qoe_quality,qoe_rebuf,qoe_latency,qoe_skip,"
         "qoe_switch,pred_error,stalls,skips\n";
  for (const auto& s : summaries) {
    out << s.video << ',' << s.network << ',' << s.scheme << ',' << s.qoe.overall() << ','
        << s.qoe.quality << ',' << s.qoe.rebuf << ',' << s.qoe.latency << ',' << s.qoe.skip << ','
        << s.qoe.switching << ',' << s.pred_error << ',' << s.stalls << ',' << s.skips << "\n";
  }
  return out.str();
}

std::string cdf_csv(std::span<const std::pair<double, double>> cdf, const std::string& metric) {
  std::ostringstream out;
  out.precision(12);
  out << metric << ",cumulative_fraction\n";
  for (const auto& [v, f] : cdf) out << v << ',' << f << "\n";
  return out.str();
}

std::vector<std::string> summary_metrics() {
  return {"qoe_overall", "qoe_quality", "qoe_rebuf",  "qoe_latency",
          "qoe_skip",    "qoe_switch",  "pred_error"};
}

double summary_metric(const RunSummary& s, const std::string& metric) {
  if (metric == "qoe_overall") return s.qoe.overall();
  if (metric == "qoe_quality") return s.qoe.quality;
  if (metric == "qoe_rebuf") return s.qoe.rebuf;
  if (metric == "qoe_latency") return s.qoe.latency;
  if (metric == "qoe_skip") return s.qoe.skip;
  if (metric == "qoe_switch") return s.qoe.switching;
  if (metric == "pred_error") return s.pred_error;
  throw std::invalid_argument("unknown metric '" + metric + "'");
}

PredictionErrors prediction_experiment(const VideoTrace& video, const SchemeConfig& cfg) {
  KamaPredictor predictor(video.ladder, cfg.kama_l_max, cfg.kama_l_min, cfg.kama_n1);
  const int m = video.ladder.count();
  const long gops = video.gop_count();
  if (gops < 2) throw std::invalid_argument("prediction experiment needs at least 2 GOPs");

  double kama_sum = 0, coding_sum = 0;
  long count = 0;
  for (long g = 0; g < gops; ++g) {
    if (g > 0) {
      for (int lvl = 0; lvl < m; ++lvl) {
        double actual = segment_actual_bitrate(video, g, lvl);
        kama_sum += prediction_error(predictor.predictions_bps()[lvl], actual);
        coding_sum += prediction_error(video.ladder.levels_bps[lvl], actual);
        ++count;
      }
    }
    int downloaded = static_cast<int>(g % m);
    predictor.observe(downloaded, segment_actual_bitrate(video, g, downloaded));
  }
  return {kama_sum / static_cast<double>(count), coding_sum / static_cast<double>(count)};
}

} // namespace hysa
