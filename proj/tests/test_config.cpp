#include <doctest.h>

#include <sstream>

#include "hysa/config.hpp"

using namespace hysa;

namespace {
SchemeConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in);
}
} // namespace

TEST_CASE("empty config yields defaults") {
  auto cfg = parse("");
  CHECK(cfg.weights.p_q == 1.0);
  CHECK(cfg.weights.p_d == cfg.weights.p_l);
  CHECK(cfg.stall_threshold() == cfg.bands.b_min0);
  CHECK(cfg.ladder.count() == 4);
  CHECK(cfg.ladder.levels_bps[3] == 1850e3);
}

TEST_CASE("overrides and comments") {
  auto cfg = parse(
      "# comment\n"
      "p_r = 2.0\n"
      "ladder_kbps = 300, 700, 1500\n"
      "b_min0 = 0.4   # trailing comment\n"
      "skip_lambda = 2\n");
  CHECK(cfg.weights.p_r == 2.0);
  CHECK(cfg.ladder.count() == 3);
  CHECK(cfg.ladder.levels_bps[0] == 300e3);
  CHECK(cfg.bands.b_min0 == 0.4);
  CHECK(cfg.stall_threshold() == 0.4);
  CHECK(cfg.skip_lambda == 2.0);
}

TEST_CASE("unknown key is an error") {
  CHECK_THROWS_WITH_AS(parse("p_qq = 1\n"), "unknown config key 'p_qq'", std::runtime_error);
}

TEST_CASE("band ordering enforced") {
  CHECK_THROWS(parse("b_min1 = 0.1\n")); // violates b_min0 < b_min1
  CHECK_THROWS(parse("kama_l_max = 1\n"));
  CHECK_THROWS(parse("skip_lambda = 0\n"));
}
