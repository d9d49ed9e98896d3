#include "holoprep/dataset/tiling.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <optional>
#include <vector>

namespace holoprep::dataset {

using core::Annotation;
using core::BBox;
using core::CoordSpace;

namespace {

// Absolute slack on the visible-fraction comparison so that an exact
// analytic split (e.g. 0.5 of a box) is not lost to round-off.
constexpr double kFractionSlack = 1e-12;

void check_options(const TileOptions &o) {
  if (o.tile_size < 32)
    throw config_error(fmt::format("tile_size must be >= 32, got {}", o.tile_size));
  if (!(o.keep_fraction > 0.0 && o.keep_fraction <= 1.0))
    throw config_error(
        fmt::format("keep_fraction must be in (0,1], got {}", o.keep_fraction));
}

} // namespace

std::string Tile::stem() const {
  return fmt::format("{}_r{}_c{}", parent, rect.row, rect.col);
}

std::vector<TileRect> tile_grid(int width, int height, int tile_size) {
  if (width < 1 || height < 1)
    throw input_error("cannot tile a zero-area image");
  if (tile_size < 1)
    throw config_error("tile_size must be positive");
  std::vector<TileRect> rects;
  const int rows = (height + tile_size - 1) / tile_size;
  const int cols = (width + tile_size - 1) / tile_size;
  rects.reserve(static_cast<std::size_t>(rows) * cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int x = c * tile_size;
      const int y = r * tile_size;
      rects.push_back({r, c, x, y, std::min(tile_size, width - x),
                       std::min(tile_size, height - y)});
    }
  }
  return rects;
}

namespace {

BBox rect_box(const TileRect &rect) {
  return BBox::from_corners(rect.x, rect.y, rect.x + rect.width,
                            rect.y + rect.height, CoordSpace::Pixel);
}

// Tile-local copy of `a`, or nullopt when too little of it is visible.
std::optional<Annotation> localize(const Annotation &a, core::Extent image,
                                   const TileRect &rect, double keep_fraction) {
  if (a.box.space != CoordSpace::Normalized)
    throw input_error("tiling expects normalized annotations");
  const BBox px = core::to_pixels(a.box, image);
  const BBox tile_box = rect_box(rect);
  const double inter = core::intersection_area(px, tile_box);
  if (inter <= 0.0 || inter / px.area() < keep_fraction - kFractionSlack)
    return std::nullopt;
  const double x0 = std::max(px.x0(), tile_box.x0()) - rect.x;
  const double y0 = std::max(px.y0(), tile_box.y0()) - rect.y;
  const double x1 = std::min(px.x1(), tile_box.x1()) - rect.x;
  const double y1 = std::min(px.y1(), tile_box.y1()) - rect.y;
  Annotation local = a;
  local.box = core::to_normalized(
      BBox::from_corners(x0, y0, x1, y1, CoordSpace::Pixel),
      {static_cast<double>(rect.width), static_cast<double>(rect.height)});
  return local;
}

} // namespace

std::vector<Annotation>
annotations_for_tile(std::span<const Annotation> parent_annotations,
                     int image_width, int image_height, const TileRect &rect,
                     double keep_fraction) {
  const core::Extent image{static_cast<double>(image_width),
                           static_cast<double>(image_height)};
  std::vector<Annotation> out;
  for (const Annotation &a : parent_annotations)
    if (auto local = localize(a, image, rect, keep_fraction))
      out.push_back(*local);
  return out;
}

TilingResult tile_image(const core::Raster &raster,
                        std::span<const Annotation> annotations,
                        const std::string &parent, const TileOptions &options) {
  check_options(options);
  if (raster.empty())
    throw input_error("cannot tile a zero-area image");

  const core::Extent image{static_cast<double>(raster.width()),
                           static_cast<double>(raster.height())};
  TilingResult result;
  std::vector<bool> survived(annotations.size(), false);
  for (const TileRect &rect :
       tile_grid(raster.width(), raster.height(), options.tile_size)) {
    Tile tile{parent, rect,
              core::crop(raster, rect.x, rect.y, rect.width, rect.height), {}};
    for (std::size_t i = 0; i < annotations.size(); ++i) {
      if (auto local = localize(annotations[i], image, rect, options.keep_fraction)) {
        tile.annotations.push_back(*local);
        survived[i] = true;
      }
    }
    result.tiles.push_back(std::move(tile));
  }
  result.damaged = static_cast<std::size_t>(
      std::count(survived.begin(), survived.end(), false));
  return result;
}

} // namespace holoprep::dataset
