#include "holoprep/dataset/screening.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

namespace holoprep::dataset {

double black_fraction(const core::Raster &r) noexcept {
  if (r.empty())
    return 0.0;
  const int ch = r.channels();
  const auto data = r.data();
  std::size_t black = 0;
  for (std::size_t i = 0; i < data.size(); i += ch) {
    bool zero = true;
    for (int c = 0; c < ch; ++c)
      zero = zero && data[i + c] == 0;
    black += zero;
  }
  return static_cast<double>(black) / static_cast<double>(r.pixel_count());
}

bool is_excluded(double fraction, double threshold) noexcept {
  return fraction >= threshold;
}

ScreenResult screen_tiles(std::vector<Tile> tiles, double threshold) {
  if (!(threshold > 0.0 && threshold <= 1.0))
    throw config_error(
        fmt::format("black threshold must be in (0,1], got {}", threshold));
  ScreenResult result;
  for (Tile &t : tiles) {
    if (is_excluded(black_fraction(t.raster), threshold))
      result.excluded.push_back(std::move(t));
    else
      result.kept.push_back(std::move(t));
  }
  return result;
}

} // namespace holoprep::dataset
