#pragma once

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/raster.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace holoprep::dataset {

struct TileRect {
  int row = 0;
  int col = 0;
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;
};

struct Tile {
  std::string parent;
  TileRect rect;
  core::Raster raster;
  std::vector<core::Annotation> annotations; // normalized to the tile

  // `<parent>_r<row>_c<col>`
  std::string stem() const;
};

struct TileOptions {
  int tile_size = 640;
  // Minimum visible fraction of a box's area for it to join a tile.
  double keep_fraction = 0.5;
};

struct TilingResult {
  std::vector<Tile> tiles;
  // Parent annotations that reached keep_fraction in no tile.
  std::size_t damaged = 0;
};

// Non-overlapping grid anchored at (0,0); the last row and column are
// truncated at the image edge, never padded.
std::vector<TileRect> tile_grid(int width, int height, int tile_size);

// Tile-local, normalized copies of the parent annotations (normalized to the
// parent) whose visible fraction inside `rect` is at least keep_fraction.
std::vector<core::Annotation>
annotations_for_tile(std::span<const core::Annotation> parent_annotations,
                     int image_width, int image_height, const TileRect &rect,
                     double keep_fraction);

TilingResult tile_image(const core::Raster &raster,
                        std::span<const core::Annotation> annotations,
                        const std::string &parent, const TileOptions &options = {});

} // namespace holoprep::dataset
