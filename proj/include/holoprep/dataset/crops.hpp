#pragma once

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/raster.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace holoprep::dataset {

struct Crop {
  core::Raster raster;
  int class_id = 0;
  std::size_t annotation_index = 0;
};

struct CropResult {
  std::vector<Crop> crops;
  // Annotation indices whose pixel region was empty after clipping.
  std::vector<std::size_t> skipped;
};

// One out_size x out_size bilinear crop per normalized annotation. The box is
// clipped to the image and widened to whole pixels before resampling.
// Throws on an annotation without a concrete class.
CropResult extract_crops(const core::Raster &raster,
                         std::span<const core::Annotation> annotations,
                         int out_size = 112);

// `<parent>_a<index>_<class>`
std::string crop_stem(const std::string &parent, std::size_t annotation_index,
                      const std::string &class_name);

} // namespace holoprep::dataset
