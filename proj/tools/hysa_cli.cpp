#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hysa/harness.hpp"
#include "hysa/simulator.hpp"
#include "hysa/tracegen.hpp"

namespace fs = std::filesystem;

namespace {

hysa::SchemeConfig load_config(const std::string& path) {
  if (path.empty()) return hysa::SchemeConfig{};
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file '" + path + "'");
  return hysa::parse_config(in);
}

hysa::VideoTrace load_video(const std::string& path, const hysa::SchemeConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open video trace '" + path + "'");
  return hysa::parse_video_trace(in, cfg.frame_duration_s, cfg.gop_duration_s, cfg.ladder);
}

hysa::NetworkTrace load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open network trace '" + path + "'");
  return hysa::parse_network_trace(in);
}

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << content;
}

std::vector<fs::path> csv_files(const std::string& dir) {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".csv") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  if (out.empty()) throw std::runtime_error("no .csv files in '" + dir + "'");
  return out;
}

std::vector<std::string> split_schemes(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  if (out.empty()) throw std::runtime_error("empty scheme list");
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trace-driven simulator for hybrid live-streaming control"};
  app.require_subcommand(1);

  std::string video_path, network_path, scheme, config_path, out_dir;
  std::string videos_dir, networks_dir, schemes_list;
  std::uint64_t seed = 1;

  auto* sim = app.add_subcommand("simulate", "run one (video, network, scheme) simulation");
  sim->add_option("--video", video_path, "video trace CSV")->required();
  sim->add_option("--network", network_path, "network trace CSV")->required();
  sim->add_option("--scheme", scheme, "HYSA | HYSA-N | LOOKAHEAD | BUFFER-THRESHOLD | FIXED(n)")
      ->default_val("HYSA");
  sim->add_option("--config", config_path, "key = value config file");
  sim->add_option("--out", out_dir, "output directory")->required();

  auto* batch = app.add_subcommand("batch", "run a scheme x video x network matrix");
  batch->add_option("--videos", videos_dir, "directory of video trace CSVs")->required();
  batch->add_option("--networks", networks_dir, "directory of network trace CSVs")->required();
  batch->add_option("--schemes", schemes_list, "comma-separated scheme list")->required();
  batch->add_option("--config", config_path, "key = value config file");
  batch->add_option("--out", out_dir, "output directory")->required();

  auto* gen = app.add_subcommand("gen-traces", "generate the synthetic trace suite");
  gen->add_option("--seed", seed, "generator seed")->default_val(1);
  gen->add_option("--config", config_path, "key = value config file (for the ladder)");
  gen->add_option("--out", out_dir, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*sim) {
      auto cfg = load_config(config_path);
      auto video = load_video(video_path, cfg);
      auto network = load_network(network_path);
      auto controller = hysa::make_controller(scheme, cfg);
      auto log = hysa::run(video, network, cfg, *controller);
      write_file(fs::path(out_dir) / "frames.csv", log.frames_csv());
      write_file(fs::path(out_dir) / "segments.csv", log.segments_csv());
      auto summary = hysa::summarize_run(fs::path(video_path).stem().string(),
                                         fs::path(network_path).stem().string(), scheme, log,
                                         cfg.weights);
      write_file(fs::path(out_dir) / "summary.csv", hysa::summary_csv({&summary, 1}));
      std::cout << "overall QoE: " << summary.qoe.overall() << "  stalls: " << summary.stalls
                << "  skips: " << summary.skips << "\n";
    } else if (*batch) {
      auto cfg = load_config(config_path);
      std::vector<hysa::NamedVideo> videos;
      for (const auto& p : csv_files(videos_dir))
        videos.push_back({p.stem().string(), load_video(p.string(), cfg)});
      std::vector<hysa::NamedNetwork> networks;
      for (const auto& p : csv_files(networks_dir))
        networks.push_back({p.stem().string(), load_network(p.string())});
      auto schemes = split_schemes(schemes_list);
      auto summaries = hysa::run_matrix(videos, networks, schemes, cfg);
      write_file(fs::path(out_dir) / "summary.csv", hysa::summary_csv(summaries));
      for (const auto& metric : hysa::summary_metrics()) {
        std::vector<double> values;
        for (const auto& s : summaries) values.push_back(hysa::summary_metric(s, metric));
        auto cdf = hysa::emit_cdf(values);
        write_file(fs::path(out_dir) / ("cdf_" + metric + ".csv"), hysa::cdf_csv(cdf, metric));
      }
      std::cout << summaries.size() << " runs -> " << (fs::path(out_dir) / "summary.csv").string()
                << "\n";
    } else if (*gen) {
      auto cfg = load_config(config_path);
      auto suite = hysa::generate_suite(seed, cfg.ladder);
      for (const auto& f : suite.videos) write_file(fs::path(out_dir) / "videos" / f.name, f.csv);
      for (const auto& f : suite.networks)
        write_file(fs::path(out_dir) / "networks" / f.name, f.csv);
      std::cout << "wrote " << suite.videos.size() << " video traces and "
                << suite.networks.size() << " network traces under " << out_dir << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
