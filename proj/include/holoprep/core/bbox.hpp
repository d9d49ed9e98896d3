#pragma once

#include <optional>

namespace holoprep::core {

enum class CoordSpace { Normalized, Pixel };

// Axis-aligned box stored as center + extent. In normalized space the
// coordinates are fractions of the image width/height.
struct BBox {
  double cx = 0.0;
  double cy = 0.0;
  double w = 0.0;
  double h = 0.0;
  CoordSpace space = CoordSpace::Normalized;

  double x0() const noexcept { return cx - 0.5 * w; }
  double y0() const noexcept { return cy - 0.5 * h; }
  double x1() const noexcept { return cx + 0.5 * w; }
  double y1() const noexcept { return cy + 0.5 * h; }
  double area() const noexcept { return w * h; }

  static BBox from_corners(double x0, double y0, double x1, double y1,
                           CoordSpace space) noexcept {
    return {0.5 * (x0 + x1), 0.5 * (y0 + y1), x1 - x0, y1 - y0, space};
  }

  bool operator==(const BBox &) const = default;
};

// Width/height of the frame a box lives in (pixels, or 1x1 when normalized).
struct Extent {
  double width = 1.0;
  double height = 1.0;
};

// Throws if w/h are not positive and finite, or a normalized center leaves [0,1].
void validate(const BBox &b);

double intersection_area(const BBox &a, const BBox &b) noexcept;

// Intersection over union; 0 for disjoint boxes. Boxes must share a space.
double iou(const BBox &a, const BBox &b);

// Box clipped to [0,width] x [0,height]; nullopt when nothing remains.
std::optional<BBox> clip(const BBox &b, Extent bounds) noexcept;

BBox to_pixels(const BBox &b, Extent image) noexcept;
BBox to_normalized(const BBox &b, Extent image) noexcept;

} // namespace holoprep::core
