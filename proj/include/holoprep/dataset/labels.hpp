#pragma once

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/manifest.hpp"

#include <span>
#include <vector>

namespace holoprep::dataset {

// How an expansion factor is read: as an area multiplier (each side grows by
// sqrt(factor)) or directly as a side multiplier.
enum class ExpansionMode { Area, Side };

// Grows `b` about its center by `factor` without clipping. factor >= 1.
core::BBox expand_bbox_unclipped(const core::BBox &b, double factor,
                                 ExpansionMode mode = ExpansionMode::Area);

// Expanded box clipped to `bounds` (use {1,1} for normalized boxes). When the
// box lies entirely outside the bounds it is returned unclipped.
core::BBox expand_bbox(const core::BBox &b, double factor, core::Extent bounds,
                       ExpansionMode mode = ExpansionMode::Area);

// Gives every UNKNOWN-class annotation the record's species tag.
core::ImageRecord assign_classes_from_image(const core::ImageRecord &record);

// Keeps every manual annotation, then greedily accepts auto annotations by
// descending confidence (missing confidence counts as 0; ties keep list
// order), dropping any with IoU >= iou_threshold against a manual label or an
// already accepted auto label. Accepted auto labels keep their input order.
std::vector<core::Annotation> merge_labels(std::span<const core::Annotation> manual,
                                           std::span<const core::Annotation> automatic,
                                           double iou_threshold = 0.5);

} // namespace holoprep::dataset
