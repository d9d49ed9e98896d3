#pragma once

#include "holoprep/core/raster.hpp"
#include "holoprep/dataset/tiling.hpp"

#include <vector>

namespace holoprep::dataset {

inline constexpr double kDefaultBlackThreshold = 0.20;

// Fraction of pixels whose every channel is exactly 0.
double black_fraction(const core::Raster &r) noexcept;

// A tile is excluded iff black_fraction >= threshold.
bool is_excluded(double black_fraction, double threshold) noexcept;

struct ScreenResult {
  std::vector<Tile> kept;
  std::vector<Tile> excluded;
};

// threshold must lie in (0,1]. Input order is preserved within each side.
ScreenResult screen_tiles(std::vector<Tile> tiles,
                          double threshold = kDefaultBlackThreshold);

} // namespace holoprep::dataset
