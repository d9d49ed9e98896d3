#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace holoprep::core {

// Interleaved 8-bit image, 1 channel (holographic) or 3 channels (optical RGB).
//
// Pixel (x, y) covers the continuous square [x, x+1) x [y, y+1); its center
// sits at (x + 0.5, y + 0.5). Every geometric operation in the library uses
// this convention.
class Raster {
public:
  Raster() = default;
  Raster(int width, int height, int channels, std::uint8_t fill = 0);
  Raster(int width, int height, int channels, std::vector<std::uint8_t> data);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  int channels() const noexcept { return channels_; }
  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_);
  }
  bool empty() const noexcept { return data_.empty(); }

  std::span<const std::uint8_t> data() const noexcept { return data_; }
  std::span<std::uint8_t> data() noexcept { return data_; }

  std::uint8_t at(int x, int y, int c = 0) const noexcept {
    return data_[index(x, y, c)];
  }
  std::uint8_t &at(int x, int y, int c = 0) noexcept {
    return data_[index(x, y, c)];
  }

  std::span<const std::uint8_t> row(int y) const noexcept {
    return {data_.data() + index(0, y, 0),
            static_cast<std::size_t>(width_) * channels_};
  }
  std::span<std::uint8_t> row(int y) noexcept {
    return {data_.data() + index(0, y, 0),
            static_cast<std::size_t>(width_) * channels_};
  }

  bool operator==(const Raster &) const = default;

private:
  std::size_t index(int x, int y, int c) const noexcept {
    return (static_cast<std::size_t>(y) * width_ + x) * channels_ + c;
  }

  int width_ = 0;
  int height_ = 0;
  int channels_ = 1;
  std::vector<std::uint8_t> data_;
};

// Copy of the pixel rectangle [x, x+w) x [y, y+h); must lie inside `src`.
Raster crop(const Raster &src, int x, int y, int w, int h);

// Bilinear resize with half-pixel centers and edge replication.
Raster resize_bilinear(const Raster &src, int out_width, int out_height);

// Bilinear sample at continuous coordinate (u, v); edge-replicated inside
// [0, w) x [0, h). Caller handles out-of-frame points.
double sample_bilinear(const Raster &src, double u, double v, int c);

std::uint8_t clamp_to_u8(double v) noexcept;

} // namespace holoprep::core
