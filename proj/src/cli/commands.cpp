#include "holoprep/cli/commands.hpp"

#include "util.hpp"

#include "holoprep/augment/augment.hpp"
#include "holoprep/cli/config.hpp"
#include "holoprep/cli/synth.hpp"
#include "holoprep/core/annotation.hpp"
#include "holoprep/core/error.hpp"
#include "holoprep/core/manifest.hpp"
#include "holoprep/core/png_io.hpp"
#include "holoprep/dataset/counts.hpp"
#include "holoprep/dataset/crops.hpp"
#include "holoprep/dataset/labels.hpp"
#include "holoprep/dataset/screening.hpp"
#include "holoprep/dataset/split.hpp"
#include "holoprep/dataset/tiling.hpp"
#include "holoprep/eval/metrics.hpp"
#include "holoprep/registration/registration.hpp"
#include "holoprep/registration/warp.hpp"
#include "holoprep/report/report.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

namespace holoprep::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using core::Annotation;
using detail::ensure_dir;
using detail::ensure_parent;
using detail::list_files;
using detail::parallel_for;
using detail::read_text;
using detail::write_text;

spdlog::logger &log() {
  static const auto logger = [] {
    auto l = spdlog::stderr_logger_mt("holoprep");
    l->set_pattern("holoprep %l: %v");
    return l;
  }();
  return *logger;
}

struct Globals {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> jobs;
  std::string log_level = "info";
};

// Config file, then the jobs environment variable, then global flags. Each
// command applies its own flags afterwards and validates.
PipelineConfig resolve(const Globals &g) {
  PipelineConfig cfg = g.config_path.empty() ? PipelineConfig{} : load_config(g.config_path);
  if (const char *env = std::getenv(kJobsEnv); env && *env) {
    unsigned v = 0;
    const char *end = env + std::char_traits<char>::length(env);
    const auto [p, ec] = std::from_chars(env, end, v);
    if (ec != std::errc() || p != end)
      throw config_error(fmt::format("environment variable {}='{}' is not a thread count",
                                     kJobsEnv, env));
    cfg.jobs = v;
  }
  if (g.jobs)
    cfg.jobs = *g.jobs;
  if (g.seed) {
    cfg.seed = *g.seed;
    cfg.detection_policy.seed = *g.seed;
    cfg.classification_policy.seed = *g.seed;
  }
  return cfg;
}

template <typename T> void override_with(T &field, const std::optional<T> &flag) {
  if (flag)
    field = *flag;
}

dataset::ExpansionMode parse_mode(const std::string &s) {
  if (s == "area")
    return dataset::ExpansionMode::Area;
  if (s == "side")
    return dataset::ExpansionMode::Side;
  throw config_error("expansion mode must be 'area' or 'side', got '" + s + "'");
}

// The worker count never changes outputs, so it is left out of summaries.
json summary_config(const PipelineConfig &cfg) {
  json j = to_json(cfg);
  j.erase("jobs");
  return j;
}

void write_summary(const fs::path &path, const std::string &command,
                   const PipelineConfig &cfg, json inputs, json outputs, json stats) {
  json s{{"command", command},
         {"config", summary_config(cfg)},
         {"inputs", std::move(inputs)},
         {"outputs", std::move(outputs)},
         {"stats", std::move(stats)}};
  if (path.has_parent_path())
    ensure_dir(path.parent_path());
  write_text(path, canonical_dump(s));
  log().info("summary written to {}", path.string());
}

fs::path summary_for_file(const std::string &flag, const fs::path &out) {
  if (!flag.empty())
    return flag;
  return out.parent_path() / (out.stem().string() + ".summary.json");
}

fs::path summary_for_dir(const std::string &flag, const fs::path &dir,
                         const std::string &command) {
  if (!flag.empty())
    return flag;
  return dir / (command + "_summary.json");
}

// First token of every non-empty line.
std::set<std::string> read_stem_list(const fs::path &path) {
  std::istringstream in(read_text(path));
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok)
      out.insert(tok);
  }
  return out;
}

std::vector<fs::path> filtered(std::vector<fs::path> files, const std::string &only) {
  if (only.empty())
    return files;
  const auto keep = read_stem_list(only);
  std::erase_if(files, [&](const fs::path &p) { return !keep.contains(p.stem().string()); });
  return files;
}

std::vector<Annotation> labels_if_present(const fs::path &path) {
  if (!fs::exists(path))
    return {};
  return core::read_label_file(path.string());
}

int class_by_name(const PipelineConfig &cfg, const std::string &name) {
  for (std::size_t i = 0; i < cfg.class_names.size(); ++i)
    if (cfg.class_names[i] == name)
      return static_cast<int>(i);
  int v = -1;
  const auto [p, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
  if (ec == std::errc() && p == name.data() + name.size() && v >= 0 &&
      v < static_cast<int>(cfg.class_names.size()))
    return v;
  throw input_error(fmt::format("unknown class '{}' (known: {})", name,
                                fmt::join(cfg.class_names, ", ")));
}

void check_classes(const PipelineConfig &cfg, std::span<const Annotation> anns,
                   const fs::path &where) {
  for (std::size_t i = 0; i < anns.size(); ++i) {
    const int c = anns[i].class_id;
    if (c == core::kUnknownClass)
      throw input_error(fmt::format(
          "{}: annotation {} has no class; assign one with propagate --species",
          where.string(), i));
    if (c < 0 || c >= static_cast<int>(cfg.class_names.size()))
      throw input_error(fmt::format("{}: annotation {} has class {} outside [0,{})",
                                    where.string(), i, c, cfg.class_names.size()));
  }
}

// ---------------------------------------------------------------- register

struct RegisterArgs {
  std::string pairs, out, summary;
};

void cmd_register(const PipelineConfig &cfg, const RegisterArgs &a) {
  validate(cfg);
  const auto pairs = registration::read_point_pairs(a.pairs);
  const auto rep = registration::estimate_similarity(pairs);
  if (rep.degenerate)
    log().warn("point configuration is collinear (sigma2/sigma1 = {:.3g}); transform "
               "is the least-squares optimum but poorly conditioned",
               rep.singular_major > 0 ? rep.singular_minor / rep.singular_major : 0.0);
  ensure_parent(a.out);
  registration::write_transform(rep.transform, a.out);
  const auto &t = rep.transform;
  log().info("scale {:.6f}, rotation {:.4f} deg, rms residual {:.3g} px", t.scale(),
             t.angle() * 180.0 / std::numbers::pi, rep.rms_residual);
  write_summary(summary_for_file(a.summary, a.out), "register", cfg,
                {{"pairs", a.pairs}}, {{"transform", a.out}},
                {{"scale", t.scale()},
                 {"rotation_deg", t.angle() * 180.0 / std::numbers::pi},
                 {"translation", {t.translation().x(), t.translation().y()}},
                 {"rms_residual", rep.rms_residual},
                 {"n_points", rep.n_points},
                 {"singular_values", {rep.singular_major, rep.singular_minor}},
                 {"degenerate", rep.degenerate}});
}

// -------------------------------------------------------------------- warp

struct WarpArgs {
  std::string image, transform, out, like, summary;
  std::optional<int> width, height;
  std::optional<std::string> interp;
  std::optional<std::uint64_t> max_pixels;
};

void cmd_warp(PipelineConfig cfg, const WarpArgs &a) {
  if (a.interp) {
    if (*a.interp == "nearest")
      cfg.warp_interpolation = registration::Interpolation::Nearest;
    else if (*a.interp == "bilinear")
      cfg.warp_interpolation = registration::Interpolation::Bilinear;
    else
      throw config_error("--interp must be 'nearest' or 'bilinear'");
  }
  override_with(cfg.max_warp_pixels, a.max_pixels);
  validate(cfg);

  int w = 0, h = 0;
  if (!a.like.empty()) {
    const auto ref = core::read_png(a.like);
    w = ref.width();
    h = ref.height();
  }
  if (a.width)
    w = *a.width;
  if (a.height)
    h = *a.height;
  if (w <= 0 || h <= 0)
    throw config_error("warp needs an output size: --like IMAGE or --width/--height");

  const auto src = core::read_png(a.image);
  const auto t = registration::read_transform(a.transform);
  registration::WarpOptions opts;
  opts.interpolation = cfg.warp_interpolation;
  opts.max_pixels = cfg.max_warp_pixels;
  opts.jobs = cfg.jobs;
  const auto out = registration::warp_image(src, t, w, h, opts);
  ensure_parent(a.out);
  core::write_png(out, a.out);
  const double black = dataset::black_fraction(out);
  log().info("warped {}x{} -> {}x{}, black fraction {:.4f}", src.width(), src.height(),
             w, h, black);
  write_summary(summary_for_file(a.summary, a.out), "warp", cfg,
                {{"image", a.image}, {"transform", a.transform}}, {{"image", a.out}},
                {{"source_size", {src.width(), src.height()}},
                 {"output_size", {w, h}},
                 {"channels", out.channels()},
                 {"black_fraction", black}});
}

// --------------------------------------------------------------- propagate

struct PropagateArgs {
  std::string labels, out, transform, species, summary;
  std::optional<int> src_width, src_height, dst_width, dst_height;
  std::optional<double> factor;
  std::optional<std::string> mode;
};

void cmd_propagate(PipelineConfig cfg, const PropagateArgs &a) {
  override_with(cfg.expansion_factor, a.factor);
  if (a.mode)
    cfg.expansion_mode = parse_mode(*a.mode);
  validate(cfg);

  core::ImageRecord rec;
  rec.annotations = core::read_label_file(a.labels);
  const std::size_t n_in = rec.annotations.size();
  std::size_t dropped = 0;

  if (!a.transform.empty()) {
    if (!a.src_width || !a.src_height || !a.dst_width || !a.dst_height)
      throw config_error(
          "propagate --transform needs --src-width/--src-height/--dst-width/--dst-height");
    const auto t = registration::read_transform(a.transform);
    const core::Extent src{double(*a.src_width), double(*a.src_height)};
    const core::Extent dst{double(*a.dst_width), double(*a.dst_height)};
    std::vector<Annotation> mapped;
    for (const auto &ann : rec.annotations) {
      const auto px = registration::map_bbox(t, core::to_pixels(ann.box, src));
      const auto clipped = core::clip(px, dst);
      if (!clipped) {
        ++dropped;
        continue;
      }
      Annotation m = ann;
      m.box = core::to_normalized(*clipped, dst);
      mapped.push_back(m);
    }
    rec.annotations = std::move(mapped);
  }

  if (cfg.expansion_factor > 1.0)
    for (auto &ann : rec.annotations)
      ann.box = dataset::expand_bbox(ann.box, cfg.expansion_factor, {1.0, 1.0},
                                     cfg.expansion_mode);

  std::size_t assigned = 0;
  if (!a.species.empty()) {
    rec.species_tag = class_by_name(cfg, a.species);
    for (const auto &ann : rec.annotations)
      assigned += ann.class_id == core::kUnknownClass;
    rec = dataset::assign_classes_from_image(rec);
  }

  ensure_parent(a.out);
  core::write_label_file(a.out, rec.annotations);
  log().info("propagated {} of {} labels", rec.annotations.size(), n_in);
  write_summary(summary_for_file(a.summary, a.out), "propagate", cfg,
                {{"labels", a.labels}, {"transform", a.transform}, {"species", a.species}},
                {{"labels", a.out}},
                {{"input", n_in},
                 {"output", rec.annotations.size()},
                 {"dropped", dropped},
                 {"classes_assigned", assigned}});
}

// -------------------------------------------------------------------- tile

struct TileArgs {
  std::string image, labels, out_dir, stem, summary;
  std::optional<int> tile_size;
  std::optional<double> keep_fraction;
  bool labels_only = false;
};

void cmd_tile(PipelineConfig cfg, const TileArgs &a) {
  override_with(cfg.tile_size, a.tile_size);
  override_with(cfg.keep_fraction, a.keep_fraction);
  validate(cfg);
  if (a.labels_only && a.labels.empty())
    throw config_error("tile --labels-only needs --labels");

  const auto raster = core::read_png(a.image);
  const auto anns = a.labels.empty() ? std::vector<Annotation>{}
                                     : core::read_label_file(a.labels);
  const std::string stem = a.stem.empty() ? fs::path(a.image).stem().string() : a.stem;
  const auto result = dataset::tile_image(raster, anns, stem,
                                          {cfg.tile_size, cfg.keep_fraction});
  ensure_dir(a.out_dir);
  const fs::path dir = a.out_dir;
  parallel_for(result.tiles.size(), cfg.jobs, [&](std::size_t i) {
    const auto &t = result.tiles[i];
    if (!a.labels_only)
      core::write_png(t.raster, dir / (t.stem() + ".png"));
    if (!a.labels.empty())
      core::write_label_file((dir / (t.stem() + ".txt")).string(), t.annotations);
  });

  std::size_t tile_anns = 0;
  int rows = 0, cols = 0;
  for (const auto &t : result.tiles) {
    tile_anns += t.annotations.size();
    rows = std::max(rows, t.rect.row + 1);
    cols = std::max(cols, t.rect.col + 1);
  }
  if (result.damaged > 0)
    log().warn("{} annotations reached keep_fraction {} in no tile", result.damaged,
               cfg.keep_fraction);
  log().info("{} tiles ({} x {}) written to {}", result.tiles.size(), rows, cols,
             a.out_dir);
  write_summary(summary_for_dir(a.summary, dir, a.labels_only ? "tile_labels" : "tile"),
                "tile", cfg, {{"image", a.image}, {"labels", a.labels}},
                {{"dir", a.out_dir}, {"stem", stem}},
                {{"tiles", result.tiles.size()},
                 {"grid", {rows, cols}},
                 {"annotations", anns.size()},
                 {"tile_annotations", tile_anns},
                 {"damaged", result.damaged}});
}

// ------------------------------------------------------------------ screen

struct ScreenArgs {
  std::string dir, out_dir, summary;
  std::optional<double> threshold;
};

void cmd_screen(PipelineConfig cfg, const ScreenArgs &a) {
  override_with(cfg.black_threshold, a.threshold);
  validate(cfg);
  const auto files = list_files(a.dir, ".png");
  std::vector<double> fractions(files.size());
  parallel_for(files.size(), cfg.jobs, [&](std::size_t i) {
    fractions[i] = dataset::black_fraction(core::read_png(files[i]));
  });

  std::string kept, excluded;
  std::size_t n_kept = 0, n_excluded = 0;
  for (std::size_t i = 0; i < files.size(); ++i) {
    const std::string line =
        fmt::format("{} {:.6f}\n", files[i].stem().string(), fractions[i]);
    if (dataset::is_excluded(fractions[i], cfg.black_threshold)) {
      excluded += line;
      ++n_excluded;
    } else {
      kept += line;
      ++n_kept;
    }
  }
  const fs::path out = a.out_dir.empty() ? fs::path(a.dir) : fs::path(a.out_dir);
  ensure_dir(out);
  write_text(out / "kept.txt", kept);
  write_text(out / "excluded.txt", excluded);
  log().info("screened {} tiles: {} kept, {} excluded", files.size(), n_kept, n_excluded);
  write_summary(summary_for_dir(a.summary, out, "screen"), "screen", cfg,
                {{"dir", a.dir}},
                {{"kept", (out / "kept.txt").filename().string()},
                 {"excluded", (out / "excluded.txt").filename().string()}},
                {{"tiles", files.size()}, {"kept", n_kept}, {"excluded", n_excluded}});
}

// ------------------------------------------------------------------- crops

struct CropsArgs {
  std::string image, labels, out_dir, stem, species, summary;
  std::optional<int> crop_size;
};

void cmd_crops(PipelineConfig cfg, const CropsArgs &a) {
  override_with(cfg.crop_size, a.crop_size);
  validate(cfg);
  core::ImageRecord rec;
  rec.annotations = core::read_label_file(a.labels);
  if (!a.species.empty()) {
    rec.species_tag = class_by_name(cfg, a.species);
    rec = dataset::assign_classes_from_image(rec);
  }
  check_classes(cfg, rec.annotations, a.labels);
  const auto raster = core::read_png(a.image);
  const auto result = dataset::extract_crops(raster, rec.annotations, cfg.crop_size);
  for (const auto idx : result.skipped)
    log().warn("annotation {} has no pixels inside the image; skipped", idx);

  const std::string stem = a.stem.empty() ? fs::path(a.image).stem().string() : a.stem;
  ensure_dir(a.out_dir);
  const fs::path dir = a.out_dir;
  std::vector<std::string> stems(result.crops.size());
  for (std::size_t i = 0; i < result.crops.size(); ++i) {
    const auto &c = result.crops[i];
    stems[i] = dataset::crop_stem(stem, c.annotation_index,
                                  cfg.class_names[static_cast<std::size_t>(c.class_id)]);
  }
  parallel_for(result.crops.size(), cfg.jobs, [&](std::size_t i) {
    core::write_png(result.crops[i].raster, dir / (stems[i] + ".png"));
  });
  std::string index;
  for (std::size_t i = 0; i < stems.size(); ++i)
    index += fmt::format(
        "{} {}\n", stems[i],
        cfg.class_names[static_cast<std::size_t>(result.crops[i].class_id)]);
  write_text(dir / (stem + "_crops.txt"), index);
  log().info("{} crops written to {}", result.crops.size(), a.out_dir);
  write_summary(summary_for_dir(a.summary, dir, "crops"), "crops", cfg,
                {{"image", a.image}, {"labels", a.labels}, {"species", a.species}},
                {{"dir", a.out_dir}, {"index", stem + "_crops.txt"}},
                {{"crops", result.crops.size()}, {"skipped", result.skipped.size()}});
}

// ------------------------------------------------------------------ expand

struct ExpandArgs {
  std::string in, out, summary;
  std::optional<double> factor;
  std::optional<std::string> mode;
};

void cmd_expand(PipelineConfig cfg, const ExpandArgs &a) {
  override_with(cfg.expansion_factor, a.factor);
  if (a.mode)
    cfg.expansion_mode = parse_mode(*a.mode);
  validate(cfg);

  std::vector<std::pair<fs::path, fs::path>> jobs;
  const bool dir_mode = fs::is_directory(a.in);
  if (dir_mode) {
    ensure_dir(a.out);
    for (const auto &p : list_files(a.in, ".txt"))
      jobs.emplace_back(p, fs::path(a.out) / p.filename());
  } else {
    ensure_parent(a.out);
    jobs.emplace_back(a.in, a.out);
  }

  std::vector<std::size_t> boxes(jobs.size());
  parallel_for(jobs.size(), cfg.jobs, [&](std::size_t i) {
    auto anns = core::read_label_file(jobs[i].first.string());
    for (auto &ann : anns)
      ann.box = dataset::expand_bbox(ann.box, cfg.expansion_factor, {1.0, 1.0},
                                     cfg.expansion_mode);
    core::write_label_file(jobs[i].second.string(), anns);
    boxes[i] = anns.size();
  });
  std::size_t total = 0;
  for (const auto b : boxes)
    total += b;
  log().info("expanded {} boxes in {} files by {} ({})", total, jobs.size(),
             cfg.expansion_factor,
             cfg.expansion_mode == dataset::ExpansionMode::Area ? "area" : "side");
  const fs::path summary = dir_mode ? summary_for_dir(a.summary, a.out, "expand")
                                    : summary_for_file(a.summary, a.out);
  write_summary(summary, "expand", cfg, {{"labels", a.in}}, {{"labels", a.out}},
                {{"files", jobs.size()}, {"boxes", total}});
}

// ------------------------------------------------------------------- merge

struct MergeArgs {
  std::string manual, automatic, out, summary;
  std::optional<double> iou;
};

void cmd_merge(PipelineConfig cfg, const MergeArgs &a) {
  override_with(cfg.merge_iou, a.iou);
  validate(cfg);
  const auto manual = core::read_label_file(a.manual);
  const auto automatic = core::read_label_file(a.automatic);
  for (std::size_t i = 0; i < manual.size(); ++i)
    if (manual[i].source != core::LabelSource::Manual)
      throw input_error(fmt::format("{}: line {} is an automatic label", a.manual, i + 1));
  const auto merged = dataset::merge_labels(manual, automatic, cfg.merge_iou);
  ensure_parent(a.out);
  core::write_label_file(a.out, merged);
  const std::size_t accepted = merged.size() - manual.size();
  log().info("kept {} manual and {} of {} automatic labels", manual.size(), accepted,
             automatic.size());
  write_summary(summary_for_file(a.summary, a.out), "merge", cfg,
                {{"manual", a.manual}, {"auto", a.automatic}}, {{"labels", a.out}},
                {{"manual", manual.size()},
                 {"auto_in", automatic.size()},
                 {"auto_accepted", accepted}});
}

// ------------------------------------------------------------------- split

struct SplitArgs {
  std::string labels_dir, only, out, summary;
  std::optional<std::vector<double>> ratios;
};

void cmd_split(PipelineConfig cfg, const SplitArgs &a) {
  if (a.ratios) {
    if (a.ratios->size() != 3)
      throw config_error("--ratios needs three numbers");
    cfg.split_ratios = {(*a.ratios)[0], (*a.ratios)[1], (*a.ratios)[2]};
  }
  validate(cfg);
  const auto files = filtered(list_files(a.labels_dir, ".txt"), a.only);
  const std::size_t k = cfg.class_names.size();
  std::vector<dataset::SplitItem> items;
  for (const auto &f : files) {
    const auto anns = core::read_label_file(f.string());
    check_classes(cfg, anns, f);
    dataset::SplitItem item{f.stem().string(), std::vector<std::size_t>(k, 0)};
    for (const auto &ann : anns)
      ++item.histogram[static_cast<std::size_t>(ann.class_id)];
    items.push_back(std::move(item));
  }
  const auto result = dataset::split_dataset(items, cfg.split_ratios, cfg.seed);
  for (const auto &w : result.warnings)
    log().warn("{}", w);
  ensure_parent(a.out);
  write_text(a.out, dataset::emit_split_file(result));

  json per_split = json::object();
  const char *names[3] = {"TRAIN", "VAL", "TEST"};
  for (std::size_t s = 0; s < 3; ++s) {
    json classes = json::object();
    for (std::size_t c = 0; c < k; ++c)
      classes[cfg.class_names[c]] = result.instance_counts[s][c];
    per_split[names[s]] = {{"items", result.item_counts[s]}, {"instances", classes}};
  }
  log().info("split {} items: {} / {} / {}", items.size(), result.item_counts[0],
             result.item_counts[1], result.item_counts[2]);
  write_summary(summary_for_file(a.summary, a.out), "split", cfg,
                {{"labels_dir", a.labels_dir}, {"only", a.only}}, {{"splits", a.out}},
                {{"items", items.size()}, {"splits", per_split}, {"warnings", result.warnings}});
}

// ----------------------------------------------------------------- weights

struct WeightsArgs {
  std::vector<std::size_t> counts;
  std::string labels_dir, out, summary;
};

void cmd_weights(PipelineConfig cfg, const WeightsArgs &a) {
  validate(cfg);
  std::vector<std::size_t> counts = a.counts;
  if (!a.labels_dir.empty()) {
    if (!counts.empty())
      throw config_error("weights takes --counts or --labels-dir, not both");
    counts.assign(cfg.class_names.size(), 0);
    for (const auto &f : list_files(a.labels_dir, ".txt")) {
      const auto anns = core::read_label_file(f.string());
      check_classes(cfg, anns, f);
      for (const auto &ann : anns)
        ++counts[static_cast<std::size_t>(ann.class_id)];
    }
  }
  if (counts.empty())
    throw config_error("weights needs --counts or --labels-dir");
  const auto table = dataset::class_weights(counts);
  std::vector<std::string> names;
  for (std::size_t c = 0; c < counts.size(); ++c)
    names.push_back(counts.size() == cfg.class_names.size() ? cfg.class_names[c]
                                                            : fmt::format("class{}", c));
  for (std::size_t c = 0; c < counts.size(); ++c)
    std::cout << fmt::format("{} {} {:.5f}\n", names[c], counts[c], table.weights[c]);
  const json result{{"classes", names}, {"counts", counts}, {"weights", table.weights}};
  if (!a.out.empty()) {
    ensure_parent(a.out);
    write_text(a.out, canonical_dump(result));
    write_summary(summary_for_file(a.summary, a.out), "weights", cfg,
                  {{"labels_dir", a.labels_dir}}, {{"weights", a.out}}, result);
  }
}

// ----------------------------------------------------------------- augment

struct AugmentArgs {
  std::string in_dir, only, out_dir, policy = "detection", summary;
  int copies = 1;
};

void cmd_augment(PipelineConfig cfg, const AugmentArgs &a) {
  validate(cfg);
  if (a.copies < 1)
    throw config_error("--copies must be >= 1");
  augment::AugmentationPolicy policy;
  if (a.policy == "detection")
    policy = cfg.detection_policy;
  else if (a.policy == "classification")
    policy = cfg.classification_policy;
  else
    throw config_error("--policy must be 'detection' or 'classification'");

  const auto files = filtered(list_files(a.in_dir, ".png"), a.only);
  const fs::path out = a.out_dir;
  ensure_dir(out);
  const std::size_t copies = static_cast<std::size_t>(a.copies);
  struct TaskStats {
    std::size_t boxes = 0, dropped = 0;
    bool mixed = false;
  };
  std::vector<TaskStats> stats(files.size() * copies);

  const auto label_path = [](const fs::path &png) {
    return fs::path(png).replace_extension(".txt");
  };
  parallel_for(stats.size(), cfg.jobs, [&](std::size_t task) {
    const std::size_t i = task / copies, k = task % copies;
    const auto raster = core::read_png(files[i]);
    const bool has_labels = fs::exists(label_path(files[i]));
    const auto anns = labels_if_present(label_path(files[i]));
    auto res = augment::augment(raster, anns, policy, task);
    const auto md = augment::draw_mixup(policy, task, i, files.size());
    if (md.triggered) {
      const auto partner = core::read_png(files[md.partner]);
      if (partner.width() == raster.width() && partner.height() == raster.height() &&
          partner.channels() == raster.channels()) {
        res.raster = augment::mixup(res.raster, partner, md.lambda);
        const auto extra = labels_if_present(label_path(files[md.partner]));
        res.annotations.insert(res.annotations.end(), extra.begin(), extra.end());
        stats[task].mixed = true;
      } else {
        log().warn("mixup partner {} differs in shape from {}; skipped",
                   files[md.partner].filename().string(), files[i].filename().string());
      }
    }
    const std::string stem = fmt::format("{}_aug{}", files[i].stem().string(), k);
    core::write_png(res.raster, out / (stem + ".png"));
    if (has_labels || stats[task].mixed)
      core::write_label_file((out / (stem + ".txt")).string(), res.annotations);
    stats[task].boxes = res.annotations.size();
    stats[task].dropped = res.dropped;
  });

  std::size_t boxes = 0, dropped = 0, mixed = 0;
  for (const auto &s : stats) {
    boxes += s.boxes;
    dropped += s.dropped;
    mixed += s.mixed;
  }
  log().info("{} augmented images ({} with mixup) written to {}", stats.size(), mixed,
             a.out_dir);
  write_summary(summary_for_dir(a.summary, out, "augment"), "augment", cfg,
                {{"dir", a.in_dir}, {"only", a.only}, {"policy", a.policy}},
                {{"dir", a.out_dir}},
                {{"images", files.size()},
                 {"outputs", stats.size()},
                 {"mixups", mixed},
                 {"boxes", boxes},
                 {"dropped", dropped}});
}

// ---------------------------------------------------------------- evaluate

struct EvaluateArgs {
  std::string gt_dir, det_dir, only, pred, truth, out_dir, summary;
  std::optional<double> iou;
  std::optional<std::string> interp;
};

std::vector<int> read_class_list(const PipelineConfig &cfg, const std::string &path) {
  std::istringstream in(read_text(path));
  std::vector<int> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (ls >> tok)
      out.push_back(class_by_name(cfg, tok));
  }
  return out;
}

void cmd_evaluate(PipelineConfig cfg, const EvaluateArgs &a) {
  override_with(cfg.eval_iou, a.iou);
  if (a.interp) {
    if (*a.interp == "all_point")
      cfg.ap_interpolation = eval::Interpolation::AllPoint;
    else if (*a.interp == "eleven_point")
      cfg.ap_interpolation = eval::Interpolation::ElevenPoint;
    else
      throw config_error("--interp must be 'all_point' or 'eleven_point'");
  }
  validate(cfg);

  eval::EvalResult result;
  json inputs, stats;
  if (!a.pred.empty() || !a.truth.empty()) {
    if (a.pred.empty() || a.truth.empty() || !a.gt_dir.empty())
      throw config_error("classification mode takes --pred and --truth only");
    const auto pred = read_class_list(cfg, a.pred);
    const auto truth = read_class_list(cfg, a.truth);
    result = eval::classification_metrics(pred, truth,
                                          static_cast<int>(cfg.class_names.size()));
    inputs = {{"pred", a.pred}, {"truth", a.truth}};
    stats = {{"samples", truth.size()}, {"accuracy", *result.accuracy}};
  } else {
    if (a.gt_dir.empty() || a.det_dir.empty())
      throw config_error("detection mode needs --gt-dir and --det-dir");
    const auto files = filtered(list_files(a.gt_dir, ".txt"), a.only);
    std::vector<eval::GroundTruth> gts;
    std::vector<eval::Detection> dets;
    for (const auto &f : files) {
      const std::string id = f.stem().string();
      const auto g = core::read_label_file(f.string());
      check_classes(cfg, g, f);
      for (const auto &ann : g)
        gts.push_back({id, ann.box, ann.class_id});
      const fs::path df = fs::path(a.det_dir) / f.filename();
      const auto d = labels_if_present(df);
      check_classes(cfg, d, df);
      for (const auto &ann : d)
        dets.push_back({id, ann.box, ann.class_id, ann.confidence.value_or(1.0)});
    }
    result = eval::map50(dets, gts, cfg.class_names,
                         {cfg.eval_iou, cfg.ap_interpolation});
    inputs = {{"gt_dir", a.gt_dir}, {"det_dir", a.det_dir}, {"only", a.only}};
    stats = {{"images", files.size()},
             {"ground_truth", gts.size()},
             {"detections", dets.size()},
             {"map50", *result.map50}};
  }
  const std::string text = eval::to_text(result);
  std::cout << text;
  const fs::path out = a.out_dir;
  ensure_dir(out);
  write_text(out / "eval.json", eval::to_json(result));
  write_text(out / "eval.txt", text);
  write_summary(summary_for_dir(a.summary, out, "evaluate"), "evaluate", cfg, inputs,
                {{"json", "eval.json"}, {"text", "eval.txt"}}, stats);
}

// ------------------------------------------------------------------ report

struct ReportArgs {
  std::vector<std::string> pairs;
  std::optional<double> before, after;
  std::string before_eval, after_eval, metric = "map50";
  std::string manifest, manual_dir, auto_dir, only, splits, out_dir, summary;
};

std::pair<std::size_t, std::size_t> parse_count_pair(const std::string &s) {
  const auto colon = s.find(':');
  std::size_t b = 0, e = 0;
  const auto ok = [](const char *first, const char *last, std::size_t &v) {
    const auto [p, ec] = std::from_chars(first, last, v);
    return ec == std::errc() && p == last;
  };
  if (colon == std::string::npos || !ok(s.data(), s.data() + colon, b) ||
      !ok(s.data() + colon + 1, s.data() + s.size(), e))
    throw config_error("--pair expects BASELINE:EXPANDED, got '" + s + "'");
  return {b, e};
}

void cmd_report_factors(const PipelineConfig &cfg, const ReportArgs &a) {
  if (a.pairs.empty())
    throw config_error("report factors needs at least one --pair");
  std::string text, csv = "Baseline,Expanded,Factor\n";
  json rows = json::array();
  for (const auto &p : a.pairs) {
    const auto [b, e] = parse_count_pair(p);
    const auto f = report::expansion_factor(b, e);
    const std::string shown = report::format_display(f.factor);
    text += fmt::format("{} -> {}: {}\n", b, e, shown);
    csv += fmt::format("{},{},{}\n", b, e, shown);
    rows.push_back({{"baseline", b}, {"expanded", e}, {"factor", f.factor},
                    {"display", shown}});
  }
  std::cout << text;
  if (!a.out_dir.empty()) {
    ensure_dir(a.out_dir);
    write_text(fs::path(a.out_dir) / "factors.csv", csv);
    write_summary(summary_for_dir(a.summary, a.out_dir, "report_factors"),
                  "report factors", cfg, {{"pairs", a.pairs}},
                  {{"csv", "factors.csv"}}, {{"factors", rows}});
  }
}

double metric_from_eval(const std::string &path, const std::string &metric) {
  json j;
  try {
    j = json::parse(read_text(path));
  } catch (const json::exception &e) {
    throw input_error(path + ": " + e.what());
  }
  if (!j.contains(metric) || !j[metric].is_number())
    throw input_error(fmt::format("{}: no numeric '{}' field", path, metric));
  return j[metric].get<double>();
}

void cmd_report_compare(const PipelineConfig &cfg, const ReportArgs &a) {
  if (a.metric != "map50" && a.metric != "accuracy")
    throw config_error("--metric must be 'map50' or 'accuracy'");
  double before = 0, after = 0;
  if (!a.before_eval.empty() || !a.after_eval.empty()) {
    if (a.before_eval.empty() || a.after_eval.empty() || a.before || a.after)
      throw config_error("compare takes --before-eval/--after-eval or --before/--after");
    before = metric_from_eval(a.before_eval, a.metric);
    after = metric_from_eval(a.after_eval, a.metric);
  } else {
    if (!a.before || !a.after)
      throw config_error("compare needs --before and --after");
    before = *a.before;
    after = *a.after;
  }
  const auto r = report::compare_runs(before, after);
  const std::string shown = report::format_display(r.ratio);
  std::cout << fmt::format("{} -> {}: {} x{}\n", before, after,
                           report::to_string(r.direction), shown);
  if (!a.out_dir.empty()) {
    ensure_dir(a.out_dir);
    write_summary(summary_for_dir(a.summary, a.out_dir, "report_compare"),
                  "report compare", cfg,
                  {{"before_eval", a.before_eval}, {"after_eval", a.after_eval},
                   {"metric", a.metric}},
                  json::object(),
                  {{"before", before},
                   {"after", after},
                   {"ratio", r.ratio},
                   {"display", shown},
                   {"direction", std::string(report::to_string(r.direction))}});
  }
}

void cmd_report_tables(const PipelineConfig &cfg, const ReportArgs &a) {
  core::DatasetManifest m;
  if (!a.manifest.empty()) {
    if (!a.manual_dir.empty() || !a.auto_dir.empty())
      throw config_error("tables takes --manifest or --manual-dir/--auto-dir");
    m = core::load_manifest(a.manifest);
  } else {
    if (a.manual_dir.empty())
      throw config_error("tables needs --manifest or --manual-dir");
    m.class_names = cfg.class_names;
    std::map<std::string, core::ImageRecord> records;
    const auto gather = [&](const std::string &dir) {
      for (const auto &f : filtered(list_files(dir, ".txt"), a.only)) {
        auto &rec = records[f.stem().string()];
        rec.image_path = f.stem().string();
        const auto anns = core::read_label_file(f.string());
        check_classes(cfg, anns, f);
        rec.annotations.insert(rec.annotations.end(), anns.begin(), anns.end());
      }
    };
    gather(a.manual_dir);
    if (!a.auto_dir.empty())
      gather(a.auto_dir);
    for (auto &[_, rec] : records)
      m.records.push_back(std::move(rec));
  }

  const auto instances = report::table_instances(m);
  std::string text = report::to_text(instances);
  std::optional<report::SplitTable> splits;
  if (!a.splits.empty()) {
    splits = report::table_splits(m, dataset::parse_split_file(read_text(a.splits)));
    text += "\n" + report::to_text(*splits);
  }
  std::cout << text;
  if (!a.out_dir.empty()) {
    ensure_dir(a.out_dir);
    const fs::path out = a.out_dir;
    json outputs{{"instances", "instances.csv"}};
    write_text(out / "instances.csv", report::to_csv(instances));
    if (splits) {
      write_text(out / "splits.csv", report::to_csv(*splits));
      outputs["splits"] = "splits.csv";
    }
    write_summary(summary_for_dir(a.summary, out, "report_tables"), "report tables", cfg,
                  {{"manifest", a.manifest},
                   {"manual_dir", a.manual_dir},
                   {"auto_dir", a.auto_dir},
                   {"only", a.only},
                   {"splits", a.splits}},
                  outputs,
                  {{"records", m.records.size()},
                   {"manual", instances.total.manual},
                   {"automated", instances.total.automated}});
  }
}

// ------------------------------------------------------------------- synth

struct SynthArgs {
  std::string out_dir, summary;
  SynthOptions opts;
};

void cmd_synth(const PipelineConfig &cfg, SynthArgs a) {
  validate(cfg);
  a.opts.seed = cfg.seed;
  a.opts.class_names = cfg.class_names;
  const auto info = write_synthetic_dataset(a.out_dir, a.opts);
  const auto &t = info.truth;
  log().info("synthetic scene with {} particles written to {}", info.objects, a.out_dir);
  write_summary(summary_for_dir(a.summary, a.out_dir, "synth"), "synth", cfg, json::object(),
                {{"dir", a.out_dir}},
                {{"optical_size", {a.opts.optical_width, a.opts.optical_height}},
                 {"holo_size", {a.opts.holo_width, a.opts.holo_height}},
                 {"particles", info.objects},
                 {"manual_labels", info.manual_labels},
                 {"auto_labels", info.auto_labels},
                 {"detections", info.detections},
                 {"truth",
                  {{"scale", t.scale()},
                   {"rotation_deg", t.angle() * 180.0 / std::numbers::pi},
                   {"translation", {t.translation().x(), t.translation().y()}}}}});
}

std::string_view category(const Error &e) {
  switch (e.kind()) {
  case ErrorKind::Config:
    return "config error";
  case ErrorKind::Io:
    return "i/o error";
  case ErrorKind::Input:
    return "input error";
  }
  return "error";
}

} // namespace

int run(int argc, const char *const *argv) {
  CLI::App app{"Cross-modality microscopy dataset preparation: registration, "
               "annotation propagation, tiling, screening, splitting, "
               "augmentation and evaluation."};
  app.name("holoprep");
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--config", g.config_path, "JSON pipeline config file");
  app.add_option("--seed", g.seed, "Seed for splitting, augmentation and synth");
  app.add_option("--jobs", g.jobs,
                 fmt::format("Worker threads; 0 = all cores (env {})", kJobsEnv));
  app.add_option("--log-level", g.log_level, "trace|debug|info|warn|error|off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}));

  std::function<void()> action;
  const auto bind = [&](CLI::App *sub, auto fn) { sub->callback([&, fn] { action = fn; }); };

  RegisterArgs reg;
  auto *s_reg = app.add_subcommand("register", "Estimate a similarity transform from point pairs");
  s_reg->add_option("--pairs", reg.pairs, "CSV x_src,y_src,x_dst,y_dst")->required();
  s_reg->add_option("--out", reg.out, "Transform file to write")->required();
  s_reg->add_option("--summary", reg.summary, "Run summary path");
  bind(s_reg, [&] { cmd_register(resolve(g), reg); });

  WarpArgs warp;
  auto *s_warp = app.add_subcommand("warp", "Resample an image into the reference frame");
  s_warp->add_option("--image", warp.image)->required();
  s_warp->add_option("--transform", warp.transform)->required();
  s_warp->add_option("--out", warp.out)->required();
  s_warp->add_option("--like", warp.like, "Take the output size from this image");
  s_warp->add_option("--width", warp.width);
  s_warp->add_option("--height", warp.height);
  s_warp->add_option("--interp", warp.interp, "nearest|bilinear");
  s_warp->add_option("--max-pixels", warp.max_pixels);
  s_warp->add_option("--summary", warp.summary);
  bind(s_warp, [&] { cmd_warp(resolve(g), warp); });

  PropagateArgs prop;
  auto *s_prop = app.add_subcommand("propagate", "Carry labels into the aligned frame");
  s_prop->add_option("--labels", prop.labels)->required();
  s_prop->add_option("--out", prop.out)->required();
  s_prop->add_option("--transform", prop.transform, "Map labels through this transform");
  s_prop->add_option("--src-width", prop.src_width);
  s_prop->add_option("--src-height", prop.src_height);
  s_prop->add_option("--dst-width", prop.dst_width);
  s_prop->add_option("--dst-height", prop.dst_height);
  s_prop->add_option("--factor", prop.factor, "Box expansion factor");
  s_prop->add_option("--mode", prop.mode, "area|side");
  s_prop->add_option("--species", prop.species, "Class for labels without one");
  s_prop->add_option("--summary", prop.summary);
  bind(s_prop, [&] { cmd_propagate(resolve(g), prop); });

  TileArgs tile;
  auto *s_tile = app.add_subcommand("tile", "Cut an image and its labels into tiles");
  s_tile->add_option("--image", tile.image)->required();
  s_tile->add_option("--labels", tile.labels);
  s_tile->add_option("--out-dir", tile.out_dir)->required();
  s_tile->add_option("--stem", tile.stem, "Tile name prefix (default: image stem)");
  s_tile->add_option("--tile-size", tile.tile_size);
  s_tile->add_option("--keep-fraction", tile.keep_fraction);
  s_tile->add_flag("--labels-only", tile.labels_only, "Write tile labels but no images");
  s_tile->add_option("--summary", tile.summary);
  bind(s_tile, [&] { cmd_tile(resolve(g), tile); });

  ScreenArgs screen;
  auto *s_screen = app.add_subcommand("screen", "Exclude tiles with too much black");
  s_screen->add_option("--dir", screen.dir)->required();
  s_screen->add_option("--out-dir", screen.out_dir, "Where kept.txt/excluded.txt go");
  s_screen->add_option("--threshold", screen.threshold);
  s_screen->add_option("--summary", screen.summary);
  bind(s_screen, [&] { cmd_screen(resolve(g), screen); });

  CropsArgs crops;
  auto *s_crops = app.add_subcommand("crops", "Cut one resized crop per annotation");
  s_crops->add_option("--image", crops.image)->required();
  s_crops->add_option("--labels", crops.labels)->required();
  s_crops->add_option("--out-dir", crops.out_dir)->required();
  s_crops->add_option("--stem", crops.stem);
  s_crops->add_option("--species", crops.species);
  s_crops->add_option("--crop-size", crops.crop_size);
  s_crops->add_option("--summary", crops.summary);
  bind(s_crops, [&] { cmd_crops(resolve(g), crops); });

  ExpandArgs expand;
  auto *s_expand = app.add_subcommand("expand", "Grow boxes about their centers");
  s_expand->add_option("--in", expand.in, "Label file or directory")->required();
  s_expand->add_option("--out", expand.out, "Label file or directory")->required();
  s_expand->add_option("--factor", expand.factor);
  s_expand->add_option("--mode", expand.mode, "area|side");
  s_expand->add_option("--summary", expand.summary);
  bind(s_expand, [&] { cmd_expand(resolve(g), expand); });

  MergeArgs merge;
  auto *s_merge = app.add_subcommand("merge", "Merge manual and automatic labels");
  s_merge->add_option("--manual", merge.manual)->required();
  s_merge->add_option("--auto", merge.automatic)->required();
  s_merge->add_option("--out", merge.out)->required();
  s_merge->add_option("--iou", merge.iou);
  s_merge->add_option("--summary", merge.summary);
  bind(s_merge, [&] { cmd_merge(resolve(g), merge); });

  SplitArgs split;
  auto *s_split = app.add_subcommand("split", "Stratified train/val/test split");
  s_split->add_option("--labels-dir", split.labels_dir)->required();
  s_split->add_option("--only", split.only, "Restrict to stems listed in this file");
  s_split->add_option("--out", split.out)->required();
  s_split->add_option("--ratios", split.ratios)->expected(3)->delimiter(',');
  s_split->add_option("--summary", split.summary);
  bind(s_split, [&] { cmd_split(resolve(g), split); });

  WeightsArgs weights;
  auto *s_weights = app.add_subcommand("weights", "Inverse-frequency class weights");
  s_weights->add_option("--counts", weights.counts)->delimiter(',');
  s_weights->add_option("--labels-dir", weights.labels_dir);
  s_weights->add_option("--out", weights.out);
  s_weights->add_option("--summary", weights.summary);
  bind(s_weights, [&] { cmd_weights(resolve(g), weights); });

  AugmentArgs aug;
  auto *s_aug = app.add_subcommand("augment", "Seeded augmentation of a directory");
  s_aug->add_option("--in-dir", aug.in_dir)->required();
  s_aug->add_option("--only", aug.only);
  s_aug->add_option("--out-dir", aug.out_dir)->required();
  s_aug->add_option("--policy", aug.policy, "detection|classification");
  s_aug->add_option("--copies", aug.copies);
  s_aug->add_option("--summary", aug.summary);
  bind(s_aug, [&] { cmd_augment(resolve(g), aug); });

  EvaluateArgs ev;
  auto *s_eval = app.add_subcommand("evaluate", "mAP50 or classification accuracy");
  s_eval->add_option("--gt-dir", ev.gt_dir);
  s_eval->add_option("--det-dir", ev.det_dir);
  s_eval->add_option("--only", ev.only);
  s_eval->add_option("--pred", ev.pred, "One predicted class per line");
  s_eval->add_option("--truth", ev.truth, "One true class per line");
  s_eval->add_option("--out-dir", ev.out_dir)->required();
  s_eval->add_option("--iou", ev.iou);
  s_eval->add_option("--interp", ev.interp, "all_point|eleven_point");
  s_eval->add_option("--summary", ev.summary);
  bind(s_eval, [&] { cmd_evaluate(resolve(g), ev); });

  ReportArgs rep;
  auto *s_rep = app.add_subcommand("report", "Dataset and result tables");
  s_rep->require_subcommand(1);
  auto *s_fac = s_rep->add_subcommand("factors", "Label expansion factors");
  s_fac->add_option("--pair", rep.pairs, "BASELINE:EXPANDED")->required();
  s_fac->add_option("--out-dir", rep.out_dir);
  s_fac->add_option("--summary", rep.summary);
  bind(s_fac, [&] { cmd_report_factors(resolve(g), rep); });
  auto *s_cmp = s_rep->add_subcommand("compare", "Improvement ratio between two runs");
  s_cmp->add_option("--before", rep.before);
  s_cmp->add_option("--after", rep.after);
  s_cmp->add_option("--before-eval", rep.before_eval);
  s_cmp->add_option("--after-eval", rep.after_eval);
  s_cmp->add_option("--metric", rep.metric, "map50|accuracy");
  s_cmp->add_option("--out-dir", rep.out_dir);
  s_cmp->add_option("--summary", rep.summary);
  bind(s_cmp, [&] { cmd_report_compare(resolve(g), rep); });
  auto *s_tab = s_rep->add_subcommand("tables", "Instance and split count tables");
  s_tab->add_option("--manifest", rep.manifest);
  s_tab->add_option("--manual-dir", rep.manual_dir);
  s_tab->add_option("--auto-dir", rep.auto_dir);
  s_tab->add_option("--only", rep.only, "Restrict label dirs to stems listed in this file");
  s_tab->add_option("--splits", rep.splits);
  s_tab->add_option("--out-dir", rep.out_dir);
  s_tab->add_option("--summary", rep.summary);
  bind(s_tab, [&] { cmd_report_tables(resolve(g), rep); });

  SynthArgs synth;
  auto *s_synth = app.add_subcommand("synth", "Write a synthetic paired scene");
  s_synth->add_option("--out-dir", synth.out_dir)->required();
  s_synth->add_option("--optical-width", synth.opts.optical_width);
  s_synth->add_option("--optical-height", synth.opts.optical_height);
  s_synth->add_option("--holo-width", synth.opts.holo_width);
  s_synth->add_option("--holo-height", synth.opts.holo_height);
  s_synth->add_option("--objects", synth.opts.objects);
  s_synth->add_option("--landmarks", synth.opts.landmarks);
  s_synth->add_option("--summary", synth.summary);
  bind(s_synth, [&] { cmd_synth(resolve(g), synth); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    std::cerr << "holoprep: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  log().set_level(spdlog::level::from_str(g.log_level));
  try {
    if (!action) {
      std::cerr << app.help();
      return 2;
    }
    action();
  } catch (const Error &e) {
    log().error("{}: {}", category(e), e.what());
    return 1;
  } catch (const std::exception &e) {
    log().error("{}", e.what());
    return 1;
  }
  return 0;
}

int run(const std::vector<std::string> &args) {
  std::vector<const char *> argv{"holoprep"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace holoprep::cli
