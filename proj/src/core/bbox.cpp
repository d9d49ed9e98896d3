#include "holoprep/core/bbox.hpp"

#include "holoprep/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace holoprep::core {

void validate(const BBox &b) {
  if (!std::isfinite(b.cx) || !std::isfinite(b.cy) || !std::isfinite(b.w) ||
      !std::isfinite(b.h))
    throw input_error("box has non-finite field");
  if (!(b.w > 0.0) || !(b.h > 0.0))
    throw input_error("box width and height must be > 0");
  if (b.space == CoordSpace::Normalized &&
      (b.cx < 0.0 || b.cx > 1.0 || b.cy < 0.0 || b.cy > 1.0))
    throw input_error("normalized box center outside [0,1]");
}

double intersection_area(const BBox &a, const BBox &b) noexcept {
  const double iw = std::min(a.x1(), b.x1()) - std::max(a.x0(), b.x0());
  const double ih = std::min(a.y1(), b.y1()) - std::max(a.y0(), b.y0());
  if (iw <= 0.0 || ih <= 0.0)
    return 0.0;
  return iw * ih;
}

double iou(const BBox &a, const BBox &b) {
  if (a.space != b.space)
    throw input_error("iou of boxes in different coordinate spaces");
  const double inter = intersection_area(a, b);
  if (inter <= 0.0)
    return 0.0;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? std::min(1.0, inter / uni) : 0.0;
}

std::optional<BBox> clip(const BBox &b, Extent bounds) noexcept {
  const double x0 = std::max(0.0, b.x0());
  const double y0 = std::max(0.0, b.y0());
  const double x1 = std::min(bounds.width, b.x1());
  const double y1 = std::min(bounds.height, b.y1());
  if (x1 <= x0 || y1 <= y0)
    return std::nullopt;
  return BBox::from_corners(x0, y0, x1, y1, b.space);
}

BBox to_pixels(const BBox &b, Extent image) noexcept {
  if (b.space == CoordSpace::Pixel)
    return b;
  return {b.cx * image.width, b.cy * image.height, b.w * image.width,
          b.h * image.height, CoordSpace::Pixel};
}

BBox to_normalized(const BBox &b, Extent image) noexcept {
  if (b.space == CoordSpace::Normalized)
    return b;
  return {b.cx / image.width, b.cy / image.height, b.w / image.width,
          b.h / image.height, CoordSpace::Normalized};
}

} // namespace holoprep::core
