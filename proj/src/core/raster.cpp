#include "holoprep/core/raster.hpp"

#include "holoprep/core/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace holoprep::core {

namespace {

void check_shape(int width, int height, int channels) {
  if (width < 1 || height < 1)
    throw input_error("raster dimensions must be >= 1, got " +
                      std::to_string(width) + "x" + std::to_string(height));
  if (channels != 1 && channels != 3)
    throw input_error("raster channels must be 1 or 3, got " +
                      std::to_string(channels));
}

} // namespace

Raster::Raster(int width, int height, int channels, std::uint8_t fill)
    : width_(width), height_(height), channels_(channels) {
  check_shape(width, height, channels);
  data_.assign(pixel_count() * channels_, fill);
}

Raster::Raster(int width, int height, int channels,
               std::vector<std::uint8_t> data)
    : width_(width), height_(height), channels_(channels),
      data_(std::move(data)) {
  check_shape(width, height, channels);
  if (data_.size() != pixel_count() * channels_)
    throw input_error("raster data length " + std::to_string(data_.size()) +
                      " does not match " + std::to_string(width) + "x" +
                      std::to_string(height) + "x" + std::to_string(channels));
}

Raster crop(const Raster &src, int x, int y, int w, int h) {
  if (x < 0 || y < 0 || w < 1 || h < 1 || x + w > src.width() ||
      y + h > src.height())
    throw input_error("crop rectangle outside raster");
  Raster out(w, h, src.channels());
  const std::size_t row_bytes = static_cast<std::size_t>(w) * src.channels();
  for (int r = 0; r < h; ++r) {
    auto in = src.row(y + r).subspan(static_cast<std::size_t>(x) * src.channels(),
                                     row_bytes);
    std::copy(in.begin(), in.end(), out.row(r).begin());
  }
  return out;
}

std::uint8_t clamp_to_u8(double v) noexcept {
  if (!(v > 0.0))
    return 0;
  if (v >= 255.0)
    return 255;
  return static_cast<std::uint8_t>(std::lround(v));
}

double sample_bilinear(const Raster &src, double u, double v, int c) {
  const double fx = u - 0.5;
  const double fy = v - 0.5;
  const double x0f = std::floor(fx);
  const double y0f = std::floor(fy);
  const double ax = fx - x0f;
  const double ay = fy - y0f;
  const int max_x = src.width() - 1;
  const int max_y = src.height() - 1;
  const int x0 = std::clamp(static_cast<int>(x0f), 0, max_x);
  const int x1 = std::clamp(static_cast<int>(x0f) + 1, 0, max_x);
  const int y0 = std::clamp(static_cast<int>(y0f), 0, max_y);
  const int y1 = std::clamp(static_cast<int>(y0f) + 1, 0, max_y);
  const double top = (1.0 - ax) * src.at(x0, y0, c) + ax * src.at(x1, y0, c);
  const double bot = (1.0 - ax) * src.at(x0, y1, c) + ax * src.at(x1, y1, c);
  return (1.0 - ay) * top + ay * bot;
}

Raster resize_bilinear(const Raster &src, int out_width, int out_height) {
  Raster out(out_width, out_height, src.channels());
  const double sx = static_cast<double>(src.width()) / out_width;
  const double sy = static_cast<double>(src.height()) / out_height;
  for (int y = 0; y < out_height; ++y) {
    const double v = (y + 0.5) * sy;
    for (int x = 0; x < out_width; ++x) {
      const double u = (x + 0.5) * sx;
      for (int c = 0; c < src.channels(); ++c)
        out.at(x, y, c) = clamp_to_u8(sample_bilinear(src, u, v, c));
    }
  }
  return out;
}

} // namespace holoprep::core
