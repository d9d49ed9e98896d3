#pragma once

#include "holoprep/core/raster.hpp"
#include "holoprep/core/similarity.hpp"

#include <cstddef>

namespace holoprep::registration {

enum class Interpolation { Nearest, Bilinear };

struct WarpOptions {
  Interpolation interpolation = Interpolation::Bilinear;
  // Refuse outputs larger than this many pixels.
  std::size_t max_pixels = 400'000'000;
  // Worker threads over output rows; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

// Resamples `src` into an out_width x out_height frame where output pixel
// center p samples src at t^-1(p). Samples falling outside the source are
// exactly 0 in every channel.
core::Raster warp_image(const core::Raster &src,
                        const core::SimilarityTransform &t, int out_width,
                        int out_height, const WarpOptions &options = {});

} // namespace holoprep::registration
