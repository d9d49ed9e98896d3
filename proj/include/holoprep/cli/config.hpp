#pragma once

#include "holoprep/augment/augment.hpp"
#include "holoprep/dataset/labels.hpp"
#include "holoprep/dataset/split.hpp"
#include "holoprep/eval/metrics.hpp"
#include "holoprep/registration/warp.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace holoprep::cli {

struct PipelineConfig {
  int tile_size = 640;
  int crop_size = 112;
  double black_threshold = 0.20;
  double keep_fraction = 0.5;
  double expansion_factor = 1.0;
  dataset::ExpansionMode expansion_mode = dataset::ExpansionMode::Area;
  dataset::SplitRatios split_ratios;
  double merge_iou = 0.5;
  double eval_iou = 0.5;
  eval::Interpolation ap_interpolation = eval::Interpolation::AllPoint;
  registration::Interpolation warp_interpolation =
      registration::Interpolation::Bilinear;
  std::uint64_t max_warp_pixels = 400'000'000;
  std::uint64_t seed = 0;
  unsigned jobs = 0; // 0: hardware concurrency
  std::vector<std::string> class_names{"T1", "T2", "T5", "T9"};
  augment::AugmentationPolicy detection_policy =
      augment::detection_policy_default();
  augment::AugmentationPolicy classification_policy =
      augment::classification_policy_default();

  bool operator==(const PipelineConfig &) const = default;
};

// Throws config errors naming the offending field.
void validate(const PipelineConfig &c);

nlohmann::json to_json(const PipelineConfig &c);
// Missing keys keep their defaults; unknown keys and bad values are errors.
PipelineConfig config_from_json(const nlohmann::json &j);

PipelineConfig load_config(const std::filesystem::path &path);

// Canonical form: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json &j);

nlohmann::json to_json(const augment::AugmentationPolicy &p);
augment::AugmentationPolicy policy_from_json(const nlohmann::json &j,
                                             const augment::AugmentationPolicy &base);

} // namespace holoprep::cli
