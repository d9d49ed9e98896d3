#pragma once

#include "holoprep/core/similarity.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace holoprep::cli {

struct SynthOptions {
  std::uint64_t seed = 1;
  int optical_width = 1750;
  int optical_height = 800;
  int holo_width = 384;
  int holo_height = 216;
  int objects = 60;
  int landmarks = 8;
  double manual_fraction = 0.8;
  std::vector<std::string> class_names{"T1", "T2", "T5", "T9"};
};

struct SynthInfo {
  // Holographic pixel -> optical pixel.
  core::SimilarityTransform truth;
  int objects = 0;
  int manual_labels = 0;
  int auto_labels = 0;
  int detections = 0;
};

// Writes a paired optical/holographic scene of disc-shaped particles:
//   optical.png, optical.txt (manual), optical_auto.txt (class-agnostic),
//   detections.txt (scored class predictions), holo.png, pairs.csv,
//   truth_transform.txt, dataset.json.
SynthInfo write_synthetic_dataset(const std::filesystem::path &dir,
                                  const SynthOptions &options);

} // namespace holoprep::cli
