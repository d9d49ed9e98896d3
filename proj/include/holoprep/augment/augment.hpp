#pragma once

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/raster.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace holoprep::augment {

struct Jitter {
  double brightness = 0.0; // factor drawn from 1 +- brightness
  double contrast = 0.0;
  double saturation = 0.0;
  double hue = 0.0; // shift drawn from +- hue, in fractions of a full turn

  bool operator==(const Jitter &) const = default;
};

struct AugmentationPolicy {
  double max_rotation = 0.0; // degrees
  double hflip_p = 0.0;
  double vflip_p = 0.0;
  double translate_max = 0.0; // fraction of each dimension
  // Fraction of the image area kept by the resized crop; (1,1) disables it.
  std::pair<double, double> crop_keep_range{1.0, 1.0};
  Jitter jitter;
  double mixup_p = 0.0;
  std::pair<double, double> mixup_lambda_range{0.3, 0.7};
  std::uint64_t seed = 0;

  bool operator==(const AugmentationPolicy &) const = default;
};

// Throws when a probability or range is out of bounds.
void validate(const AugmentationPolicy &p);

// Rotation 45 deg, vertical flip 0.5, mixup 0.10.
AugmentationPolicy detection_policy_default();
// Rotation 40 deg, horizontal flip 0.5, translation 20%, resized crop keeping
// 80-100%, brightness/contrast/saturation +-20%, hue +-10%.
AugmentationPolicy classification_policy_default();

// Every random quantity of one augmentation, fixed by (seed, draw_index).
struct AugmentDraw {
  double angle_deg = 0.0;
  bool hflip = false;
  bool vflip = false;
  double shift_x = 0.0; // fraction of width
  double shift_y = 0.0;
  double keep = 1.0;
  double crop_u = 0.0; // crop origin position within the free range, [0,1)
  double crop_v = 0.0;
  double brightness = 1.0;
  double contrast = 1.0;
  double saturation = 1.0;
  double hue_shift = 0.0;
};

AugmentDraw draw_parameters(const AugmentationPolicy &p, std::uint64_t draw_index);

struct AugmentResult {
  core::Raster raster;
  std::vector<core::Annotation> annotations;
  std::size_t dropped = 0; // annotations pushed entirely out of frame
  AugmentDraw draw;
};

// Applies rotate -> flip -> translate -> resized crop -> jitter. Geometric
// stages share a single bilinear resample; out-of-frame samples are black.
// Output dimensions and channel count equal the input's.
AugmentResult augment(const core::Raster &r,
                      std::span<const core::Annotation> annotations,
                      const AugmentationPolicy &policy, std::uint64_t draw_index);

// Same pipeline with explicit parameters.
AugmentResult apply_draw(const core::Raster &r,
                         std::span<const core::Annotation> annotations,
                         const AugmentDraw &draw);

struct MixupDraw {
  bool triggered = false;
  double lambda = 1.0;
  std::size_t partner = 0;
};

// Decides whether draw `draw_index` blends with another of `n_candidates`
// images (never itself when n_candidates > 1).
MixupDraw draw_mixup(const AugmentationPolicy &p, std::uint64_t draw_index,
                     std::size_t self_index, std::size_t n_candidates);

// round(lambda * a + (1 - lambda) * b) per sample. Throws on shape mismatch.
core::Raster mixup(const core::Raster &a, const core::Raster &b, double lambda);

} // namespace holoprep::augment
