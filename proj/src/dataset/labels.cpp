#include "holoprep/dataset/labels.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace holoprep::dataset {

using core::Annotation;
using core::BBox;

core::BBox expand_bbox_unclipped(const BBox &b, double factor,
                                 ExpansionMode mode) {
  if (!(factor >= 1.0) || !std::isfinite(factor))
    throw config_error(fmt::format("expansion factor must be >= 1, got {}", factor));
  const double side = mode == ExpansionMode::Area ? std::sqrt(factor) : factor;
  return {b.cx, b.cy, b.w * side, b.h * side, b.space};
}

core::BBox expand_bbox(const BBox &b, double factor, core::Extent bounds,
                       ExpansionMode mode) {
  const BBox grown = expand_bbox_unclipped(b, factor, mode);
  return core::clip(grown, bounds).value_or(grown);
}

core::ImageRecord assign_classes_from_image(const core::ImageRecord &record) {
  core::ImageRecord out = record;
  for (Annotation &a : out.annotations) {
    if (a.class_id != core::kUnknownClass)
      continue;
    if (!record.species_tag)
      throw input_error("record '" + record.image_path +
                        "' has unclassified labels but no species tag");
    a.class_id = *record.species_tag;
  }
  return out;
}

std::vector<Annotation> merge_labels(std::span<const Annotation> manual,
                                     std::span<const Annotation> automatic,
                                     double iou_threshold) {
  if (!(iou_threshold > 0.0 && iou_threshold <= 1.0))
    throw config_error(
        fmt::format("merge IoU threshold must be in (0,1], got {}", iou_threshold));
  const auto check_space = [](std::span<const Annotation> xs,
                              std::optional<core::CoordSpace> &space) {
    for (const auto &a : xs) {
      if (space && *space != a.box.space)
        throw input_error("merge_labels: annotations use mixed coordinate spaces");
      space = a.box.space;
    }
  };
  std::optional<core::CoordSpace> space;
  check_space(manual, space);
  check_space(automatic, space);

  std::vector<std::size_t> order(automatic.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return automatic[a].confidence.value_or(0.0) >
           automatic[b].confidence.value_or(0.0);
  });

  std::vector<bool> accepted(automatic.size(), false);
  std::vector<std::size_t> kept;
  for (std::size_t idx : order) {
    const BBox &box = automatic[idx].box;
    const auto overlaps = [&](const BBox &other) {
      return core::iou(box, other) >= iou_threshold;
    };
    if (std::any_of(manual.begin(), manual.end(),
                    [&](const Annotation &m) { return overlaps(m.box); }))
      continue;
    if (std::any_of(kept.begin(), kept.end(),
                    [&](std::size_t k) { return overlaps(automatic[k].box); }))
      continue;
    kept.push_back(idx);
    accepted[idx] = true;
  }

  std::vector<Annotation> out(manual.begin(), manual.end());
  for (std::size_t i = 0; i < automatic.size(); ++i)
    if (accepted[i])
      out.push_back(automatic[i]);
  return out;
}

} // namespace holoprep::dataset
