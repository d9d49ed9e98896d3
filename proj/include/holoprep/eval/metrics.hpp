#pragma once

#include "holoprep/core/bbox.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holoprep::eval {

using core::iou;

struct Detection {
  std::string image_id;
  core::BBox box;
  int class_id = 0;
  double confidence = 0.0;
};

struct GroundTruth {
  std::string image_id;
  core::BBox box;
  int class_id = 0;
};

struct MatchResult {
  // Detection indices in scoring order: descending confidence, ties by input.
  std::vector<std::size_t> order;
  // Per input detection.
  std::vector<bool> true_positive;
  std::vector<std::optional<std::size_t>> matched_gt;
};

// Greedy matching: each detection, in scoring order, takes the unmatched
// ground truth of the same image and class with the highest IoU >= iou_thr.
MatchResult match_detections(std::span<const Detection> dets,
                             std::span<const GroundTruth> gts,
                             double iou_thr = 0.5);

enum class Interpolation { AllPoint, ElevenPoint };

// `tp_sequence` is ordered by descending confidence. AllPoint integrates the
// right-running-maximum precision envelope over recall exactly. Returns 0
// when n_ground_truth is 0.
double average_precision(const std::vector<bool> &tp_sequence,
                         std::size_t n_ground_truth,
                         Interpolation interp = Interpolation::AllPoint);

struct PrPoint {
  double recall = 0.0;
  double precision = 0.0;
};

struct ClassStats {
  std::string name;
  std::size_t n_ground_truth = 0;
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  // Empty when the class has no ground truth (excluded from the mean).
  std::optional<double> ap;
  std::vector<PrPoint> curve;
};

struct EvalResult {
  // Detection mode.
  std::vector<ClassStats> per_class;
  std::optional<double> map50;
  // Classification mode; confusion[truth][pred].
  std::vector<std::vector<std::size_t>> confusion;
  std::optional<double> accuracy;
};

struct MapOptions {
  double iou_threshold = 0.5;
  Interpolation interpolation = Interpolation::AllPoint;
};

// Unweighted mean of per-class AP over classes that have ground truth.
// Throws when there is no ground truth at all.
EvalResult map50(std::span<const Detection> dets, std::span<const GroundTruth> gts,
                 std::span<const std::string> class_names,
                 const MapOptions &options = {});

// K x K confusion matrix (rows truth, columns prediction) and trace/total.
EvalResult classification_metrics(std::span<const int> pred,
                                   std::span<const int> truth, int k);

// Fixed field names: per_class_ap, map50, accuracy, confusion.
std::string to_json(const EvalResult &r);
std::string to_text(const EvalResult &r);

} // namespace holoprep::eval
