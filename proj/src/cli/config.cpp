#include "holoprep/cli/config.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <set>

namespace holoprep::cli {

using nlohmann::json;

namespace {

template <typename T>
T field(const json &j, const std::string &key, const std::string &where) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception &) {
    throw config_error(fmt::format("config field '{}{}' has the wrong type",
                                   where, key));
  }
}

void reject_unknown(const json &j, const std::set<std::string> &known,
                    const std::string &where) {
  if (!j.is_object())
    throw config_error(fmt::format("config section '{}' must be an object",
                                   where.empty() ? "<root>" : where));
  for (const auto &[key, _] : j.items())
    if (!known.contains(key))
      throw config_error(fmt::format("unknown config field '{}{}'", where, key));
}

std::pair<double, double> range_field(const json &j, const std::string &key,
                                      const std::string &where) {
  const auto v = field<std::vector<double>>(j, key, where);
  if (v.size() != 2)
    throw config_error(fmt::format("config field '{}{}' must be [lo, hi]", where, key));
  return {v[0], v[1]};
}

} // namespace

json to_json(const augment::AugmentationPolicy &p) {
  return {{"max_rotation", p.max_rotation},
          {"hflip_p", p.hflip_p},
          {"vflip_p", p.vflip_p},
          {"translate_max", p.translate_max},
          {"crop_keep_range", {p.crop_keep_range.first, p.crop_keep_range.second}},
          {"jitter",
           {{"brightness", p.jitter.brightness},
            {"contrast", p.jitter.contrast},
            {"saturation", p.jitter.saturation},
            {"hue", p.jitter.hue}}},
          {"mixup_p", p.mixup_p},
          {"mixup_lambda_range",
           {p.mixup_lambda_range.first, p.mixup_lambda_range.second}},
          {"seed", p.seed}};
}

augment::AugmentationPolicy policy_from_json(const json &j,
                                             const augment::AugmentationPolicy &base) {
  reject_unknown(j,
                 {"max_rotation", "hflip_p", "vflip_p", "translate_max",
                  "crop_keep_range", "jitter", "mixup_p", "mixup_lambda_range",
                  "seed"},
                 "policy.");
  augment::AugmentationPolicy p = base;
  const std::string w = "policy.";
  if (j.contains("max_rotation")) p.max_rotation = field<double>(j, "max_rotation", w);
  if (j.contains("hflip_p")) p.hflip_p = field<double>(j, "hflip_p", w);
  if (j.contains("vflip_p")) p.vflip_p = field<double>(j, "vflip_p", w);
  if (j.contains("translate_max")) p.translate_max = field<double>(j, "translate_max", w);
  if (j.contains("crop_keep_range")) p.crop_keep_range = range_field(j, "crop_keep_range", w);
  if (j.contains("mixup_p")) p.mixup_p = field<double>(j, "mixup_p", w);
  if (j.contains("mixup_lambda_range"))
    p.mixup_lambda_range = range_field(j, "mixup_lambda_range", w);
  if (j.contains("seed")) p.seed = field<std::uint64_t>(j, "seed", w);
  if (j.contains("jitter")) {
    const json &jj = j["jitter"];
    reject_unknown(jj, {"brightness", "contrast", "saturation", "hue"}, "policy.jitter.");
    const std::string wj = "policy.jitter.";
    if (jj.contains("brightness")) p.jitter.brightness = field<double>(jj, "brightness", wj);
    if (jj.contains("contrast")) p.jitter.contrast = field<double>(jj, "contrast", wj);
    if (jj.contains("saturation")) p.jitter.saturation = field<double>(jj, "saturation", wj);
    if (jj.contains("hue")) p.jitter.hue = field<double>(jj, "hue", wj);
  }
  return p;
}

void validate(const PipelineConfig &c) {
  const auto fail = [](const char *name, const std::string &why) {
    throw config_error(fmt::format("config field '{}': {}", name, why));
  };
  if (c.tile_size < 32)
    fail("tile_size", "must be >= 32");
  if (c.crop_size < 1)
    fail("crop_size", "must be >= 1");
  if (!(c.black_threshold > 0.0 && c.black_threshold <= 1.0))
    fail("black_threshold", "must be in (0,1]");
  if (!(c.keep_fraction > 0.0 && c.keep_fraction <= 1.0))
    fail("keep_fraction", "must be in (0,1]");
  if (!(c.expansion_factor >= 1.0) || !std::isfinite(c.expansion_factor))
    fail("expansion_factor", "must be >= 1");
  const auto r = c.split_ratios.as_array();
  if (r[0] < 0 || r[1] < 0 || r[2] < 0 || std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9)
    fail("split_ratios", "must be non-negative and sum to 1");
  if (!(c.merge_iou > 0.0 && c.merge_iou <= 1.0))
    fail("merge_iou", "must be in (0,1]");
  if (!(c.eval_iou > 0.0 && c.eval_iou <= 1.0))
    fail("eval_iou", "must be in (0,1]");
  if (c.max_warp_pixels == 0)
    fail("max_warp_pixels", "must be positive");
  if (c.class_names.empty())
    fail("class_names", "must not be empty");
  std::set<std::string> seen;
  for (const auto &n : c.class_names)
    if (n.empty() || !seen.insert(n).second)
      fail("class_names", "entries must be non-empty and unique");
  try {
    augment::validate(c.detection_policy);
  } catch (const Error &e) {
    fail("detection_policy", e.what());
  }
  try {
    augment::validate(c.classification_policy);
  } catch (const Error &e) {
    fail("classification_policy", e.what());
  }
}

json to_json(const PipelineConfig &c) {
  return {
      {"tile_size", c.tile_size},
      {"crop_size", c.crop_size},
      {"black_threshold", c.black_threshold},
      {"keep_fraction", c.keep_fraction},
      {"expansion_factor", c.expansion_factor},
      {"expansion_mode",
       c.expansion_mode == dataset::ExpansionMode::Area ? "area" : "side"},
      {"split_ratios", {c.split_ratios.train, c.split_ratios.val, c.split_ratios.test}},
      {"merge_iou", c.merge_iou},
      {"eval_iou", c.eval_iou},
      {"ap_interpolation", c.ap_interpolation == eval::Interpolation::AllPoint
                               ? "all_point"
                               : "eleven_point"},
      {"warp_interpolation",
       c.warp_interpolation == registration::Interpolation::Bilinear ? "bilinear"
                                                                     : "nearest"},
      {"max_warp_pixels", c.max_warp_pixels},
      {"seed", c.seed},
      {"jobs", c.jobs},
      {"class_names", c.class_names},
      {"detection_policy", to_json(c.detection_policy)},
      {"classification_policy", to_json(c.classification_policy)},
  };
}

PipelineConfig config_from_json(const json &j) {
  reject_unknown(j,
                 {"tile_size", "crop_size", "black_threshold", "keep_fraction",
                  "expansion_factor", "expansion_mode", "split_ratios", "merge_iou",
                  "eval_iou", "ap_interpolation", "warp_interpolation",
                  "max_warp_pixels", "seed", "jobs", "class_names",
                  "detection_policy", "classification_policy"},
                 "");
  PipelineConfig c;
  const std::string w;
  if (j.contains("tile_size")) c.tile_size = field<int>(j, "tile_size", w);
  if (j.contains("crop_size")) c.crop_size = field<int>(j, "crop_size", w);
  if (j.contains("black_threshold")) c.black_threshold = field<double>(j, "black_threshold", w);
  if (j.contains("keep_fraction")) c.keep_fraction = field<double>(j, "keep_fraction", w);
  if (j.contains("expansion_factor")) c.expansion_factor = field<double>(j, "expansion_factor", w);
  if (j.contains("expansion_mode")) {
    const auto m = field<std::string>(j, "expansion_mode", w);
    if (m == "area")
      c.expansion_mode = dataset::ExpansionMode::Area;
    else if (m == "side")
      c.expansion_mode = dataset::ExpansionMode::Side;
    else
      throw config_error("config field 'expansion_mode' must be 'area' or 'side'");
  }
  if (j.contains("split_ratios")) {
    const auto r = field<std::vector<double>>(j, "split_ratios", w);
    if (r.size() != 3)
      throw config_error("config field 'split_ratios' must hold 3 numbers");
    c.split_ratios = {r[0], r[1], r[2]};
  }
  if (j.contains("merge_iou")) c.merge_iou = field<double>(j, "merge_iou", w);
  if (j.contains("eval_iou")) c.eval_iou = field<double>(j, "eval_iou", w);
  if (j.contains("ap_interpolation")) {
    const auto m = field<std::string>(j, "ap_interpolation", w);
    if (m == "all_point")
      c.ap_interpolation = eval::Interpolation::AllPoint;
    else if (m == "eleven_point")
      c.ap_interpolation = eval::Interpolation::ElevenPoint;
    else
      throw config_error(
          "config field 'ap_interpolation' must be 'all_point' or 'eleven_point'");
  }
  if (j.contains("warp_interpolation")) {
    const auto m = field<std::string>(j, "warp_interpolation", w);
    if (m == "bilinear")
      c.warp_interpolation = registration::Interpolation::Bilinear;
    else if (m == "nearest")
      c.warp_interpolation = registration::Interpolation::Nearest;
    else
      throw config_error(
          "config field 'warp_interpolation' must be 'bilinear' or 'nearest'");
  }
  if (j.contains("max_warp_pixels"))
    c.max_warp_pixels = field<std::uint64_t>(j, "max_warp_pixels", w);
  if (j.contains("seed")) c.seed = field<std::uint64_t>(j, "seed", w);
  if (j.contains("jobs")) c.jobs = field<unsigned>(j, "jobs", w);
  if (j.contains("class_names"))
    c.class_names = field<std::vector<std::string>>(j, "class_names", w);
  if (j.contains("detection_policy"))
    c.detection_policy = policy_from_json(j["detection_policy"], c.detection_policy);
  if (j.contains("classification_policy"))
    c.classification_policy =
        policy_from_json(j["classification_policy"], c.classification_policy);
  validate(c);
  return c;
}

PipelineConfig load_config(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open config file " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception &e) {
    throw config_error("config file " + path.string() + ": " + e.what());
  }
  return config_from_json(j);
}

std::string canonical_dump(const json &j) { return j.dump(2) + "\n"; }

} // namespace holoprep::cli
