#include "holoprep/dataset/crops.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace holoprep::dataset {

CropResult extract_crops(const core::Raster &raster,
                         std::span<const core::Annotation> annotations,
                         int out_size) {
  if (out_size < 1)
    throw config_error("crop size must be >= 1");
  for (std::size_t i = 0; i < annotations.size(); ++i)
    if (annotations[i].class_id == core::kUnknownClass)
      throw input_error(fmt::format(
          "annotation {} has no class; assign classes before cropping", i));

  CropResult result;
  const core::Extent image{static_cast<double>(raster.width()),
                           static_cast<double>(raster.height())};
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const core::BBox px = core::to_pixels(annotations[i].box, image);
    const int x0 = std::max(0, static_cast<int>(std::floor(px.x0())));
    const int y0 = std::max(0, static_cast<int>(std::floor(px.y0())));
    const int x1 = std::min(raster.width(), static_cast<int>(std::ceil(px.x1())));
    const int y1 = std::min(raster.height(), static_cast<int>(std::ceil(px.y1())));
    if (x1 <= x0 || y1 <= y0) {
      result.skipped.push_back(i);
      continue;
    }
    core::Raster region = core::crop(raster, x0, y0, x1 - x0, y1 - y0);
    result.crops.push_back({core::resize_bilinear(region, out_size, out_size),
                            annotations[i].class_id, i});
  }
  return result;
}

std::string crop_stem(const std::string &parent, std::size_t annotation_index,
                      const std::string &class_name) {
  return fmt::format("{}_a{}_{}", parent, annotation_index, class_name);
}

} // namespace holoprep::dataset
