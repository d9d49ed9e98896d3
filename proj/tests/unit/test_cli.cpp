#include "support.hpp"

#include "holoprep/cli/commands.hpp"
#include "holoprep/cli/config.hpp"
#include "holoprep/core/error.hpp"
#include "holoprep/core/png_io.hpp"
#include "holoprep/core/raster.hpp"

#include <doctest.h>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <cstdlib>

using namespace holoprep;
using namespace holoprep::cli;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), {"--log-level", "off"});
  return run(args);
}

json read_json(const fs::path &p) { return json::parse(support::slurp(p)); }

} // namespace

TEST_CASE("default config is valid and round-trips canonically") {
  const PipelineConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  const json j = to_json(cfg);
  CHECK(config_from_json(j) == cfg);
  CHECK(canonical_dump(to_json(config_from_json(j))) == canonical_dump(j));
  CHECK(j.at("tile_size") == 640);
  CHECK(j.at("black_threshold") == 0.2);
  CHECK(j.at("expansion_mode") == "area");
}

TEST_CASE("random configs round-trip through a file") {
  support::Gen g(111);
  const auto dir = support::temp_dir("cli_config");
  for (int i = 0; i < 50; ++i) {
    PipelineConfig cfg;
    cfg.tile_size = g.integer(32, 2000);
    cfg.crop_size = g.integer(8, 512);
    cfg.black_threshold = g.uniform(0.01, 1.0);
    cfg.keep_fraction = g.uniform(0.01, 1.0);
    cfg.expansion_factor = g.uniform(1.0, 3.0);
    cfg.expansion_mode = g.coin() ? dataset::ExpansionMode::Area : dataset::ExpansionMode::Side;
    cfg.merge_iou = g.uniform(0.05, 1.0);
    cfg.seed = g.next();
    cfg.detection_policy.max_rotation = g.uniform(0, 90);
    cfg.classification_policy.jitter.hue = g.uniform(0, 0.5);
    support::spit(dir / "c.json", canonical_dump(to_json(cfg)));
    CHECK(load_config(dir / "c.json") == cfg);
  }
}

TEST_CASE("config errors name the field") {
  const auto dir = support::temp_dir("cli_config_err");
  support::spit(dir / "unknown.json", R"({"tile_sise": 320})");
  try {
    load_config(dir / "unknown.json");
    FAIL("expected an exception");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Config);
    CHECK(std::string(e.what()).find("tile_sise") != std::string::npos);
  }
  support::spit(dir / "range.json", R"({"black_threshold": 1.5})");
  CHECK_THROWS_AS(validate(load_config(dir / "range.json")), Error);
  support::spit(dir / "type.json", R"({"tile_size": "big"})");
  CHECK_THROWS_AS(load_config(dir / "type.json"), Error);
  support::spit(dir / "policy.json", R"({"detection_policy": {"vflip_p": 2}})");
  CHECK_THROWS_AS(validate(load_config(dir / "policy.json")), Error);

  CHECK(run_cli({"--config", (dir / "unknown.json").string(), "weights", "--counts", "1,2"}) == 1);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"frobnicate"}) == 2);
  CHECK(run_cli({"register"}) == 2);
  CHECK(run_cli({"--help"}) == 0);
  const auto dir = support::temp_dir("cli_exit");
  CHECK(run_cli({"register", "--pairs", (dir / "absent.csv").string(), "--out",
             (dir / "t.txt").string()}) == 1);
  CHECK(run_cli({"weights", "--counts", "1,2,3"}) == 0);
  CHECK(run_cli({"weights", "--counts", "1,0"}) == 1);
}

TEST_CASE("register writes a transform and an exact-fit summary") {
  const auto dir = support::temp_dir("cli_register");
  // dst = 2 R(30 deg) src + (5, -3)
  const double c = std::sqrt(3.0), s = 1.0;
  std::string csv = "x_src,y_src,x_dst,y_dst\n";
  support::Gen g(112);
  for (int i = 0; i < 6; ++i) {
    const double x = g.uniform(0, 100), y = g.uniform(0, 100);
    csv += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", x, y, c * x - s * y + 5,
                       s * x + c * y - 3);
  }
  support::spit(dir / "pairs.csv", csv);
  REQUIRE(run_cli({"register", "--pairs", (dir / "pairs.csv").string(), "--out",
               (dir / "t.txt").string()}) == 0);
  CHECK(fs::exists(dir / "t.txt"));
  const json sum = read_json(dir / "t.summary.json");
  CHECK(sum.at("command") == "register");
  CHECK(sum.at("stats").at("rms_residual").get<double>() < 1e-9);
  CHECK(sum.at("stats").at("scale").get<double>() == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(sum.at("stats").at("rotation_deg").get<double>() == doctest::Approx(30.0).epsilon(1e-9));
  CHECK_FALSE(sum.at("config").contains("jobs"));
}

TEST_CASE("screen sends a quarter-black tile to the excluded list") {
  const auto dir = support::temp_dir("cli_screen");
  core::Raster clean(20, 20, 3, 90);
  core::Raster quarter = clean;
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x)
      for (int ch = 0; ch < 3; ++ch)
        quarter.at(x, y, ch) = 0;
  fs::create_directories(dir / "tiles");
  core::write_png(clean, dir / "tiles" / "a.png");
  core::write_png(quarter, dir / "tiles" / "b.png");
  REQUIRE(run_cli({"screen", "--dir", (dir / "tiles").string()}) == 0);
  CHECK(support::slurp(dir / "tiles" / "kept.txt") == "a 0.000000\n");
  CHECK(support::slurp(dir / "tiles" / "excluded.txt") == "b 0.250000\n");
  // A higher threshold on the command line keeps it.
  REQUIRE(run_cli({"screen", "--dir", (dir / "tiles").string(), "--threshold", "0.3"}) == 0);
  CHECK(support::slurp(dir / "tiles" / "excluded.txt").empty());
}

TEST_CASE("command flags override the config file") {
  const auto dir = support::temp_dir("cli_override");
  support::spit(dir / "cfg.json", R"({"black_threshold": 0.3, "tile_size": 64})");
  core::write_png(core::Raster(100, 50, 1, 7), dir / "img.png");
  REQUIRE(run_cli({"--config", (dir / "cfg.json").string(), "tile", "--image",
               (dir / "img.png").string(), "--out-dir", (dir / "a").string()}) == 0);
  CHECK(read_json(dir / "a" / "tile_summary.json").at("stats").at("tiles") == 2);
  CHECK(read_json(dir / "a" / "tile_summary.json").at("config").at("black_threshold") == 0.3);
  REQUIRE(run_cli({"--config", (dir / "cfg.json").string(), "tile", "--image",
               (dir / "img.png").string(), "--out-dir", (dir / "b").string(), "--tile-size",
               "40"}) == 0);
  CHECK(read_json(dir / "b" / "tile_summary.json").at("stats").at("tiles") == 6);
  CHECK(fs::exists(dir / "b" / "img_r1_c2.png"));
}

TEST_CASE("report factors writes the displayed values") {
  const auto dir = support::temp_dir("cli_factors");
  REQUIRE(run_cli({"report", "factors", "--pair", "4536:68268", "--pair", "2437:63018", "--out-dir",
               dir.string()}) == 0);
  CHECK(support::slurp(dir / "factors.csv") ==
        "Baseline,Expanded,Factor\n4536,68268,15.05\n2437,63018,25.86\n");
  CHECK(run_cli({"report", "factors", "--pair", "0:5"}) == 1);
  CHECK(run_cli({"report", "factors", "--pair", "12"}) == 1);
}

TEST_CASE("worker count from the environment") {
  const auto dir = support::temp_dir("cli_jobs");
  core::write_png(core::Raster(100, 100, 3, 5), dir / "img.png");
  const std::vector<std::string> args{"tile", "--image", (dir / "img.png").string(),
                                      "--out-dir", (dir / "t").string(), "--tile-size", "32"};
  ::setenv(kJobsEnv, "3", 1);
  CHECK(run_cli(args) == 0);
  const auto with_env = support::slurp(dir / "t" / "img_r3_c3.png");
  ::setenv(kJobsEnv, "many", 1);
  CHECK(run_cli(args) == 1);
  ::unsetenv(kJobsEnv);
  CHECK(run_cli(args) == 0);
  CHECK(support::slurp(dir / "t" / "img_r3_c3.png") == with_env);
}
