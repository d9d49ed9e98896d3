#pragma once

#include "holoprep/core/bbox.hpp"
#include "holoprep/core/similarity.hpp"

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace holoprep::registration {

using core::SimilarityTransform;
using core::Vec2;

// A landmark annotated in both images: source (holographic) and destination
// (optical) pixel coordinates.
struct PointPair {
  Vec2 src;
  Vec2 dst;
};

struct RegistrationReport {
  SimilarityTransform transform;
  double rms_residual = 0.0; // destination pixels
  int n_points = 0;
  // Singular values of the demeaned cross-covariance, descending.
  double singular_major = 0.0;
  double singular_minor = 0.0;
  // Set when the point configuration is (numerically) collinear; the
  // transform is still the least-squares optimum.
  bool degenerate = false;
};

// Closed-form least-squares similarity (scale, proper rotation, translation)
// minimizing sum ||c R src_i + t - dst_i||^2.
//
// Throws with fewer than two pairs, non-finite coordinates, or coincident
// source points.
RegistrationReport estimate_similarity(std::span<const PointPair> pairs);

Vec2 apply_to_point(const SimilarityTransform &t, const Vec2 &p) noexcept;
SimilarityTransform invert(const SimilarityTransform &t);

// Axis-aligned hull of the four mapped corners of a pixel-space box.
core::BBox map_bbox(const SimilarityTransform &t, const core::BBox &b);

double rms_residual(const SimilarityTransform &t,
                    std::span<const PointPair> pairs);

// Point-pair CSV: header `x_src,y_src,x_dst,y_dst`, one pair per line.
std::vector<PointPair> parse_point_pairs(const std::string &text);
std::vector<PointPair> read_point_pairs(const std::filesystem::path &path);
std::string emit_point_pairs(std::span<const PointPair> pairs);

// Transform file: scale, r00, r01, r10, r11, tx, ty on one line each,
// 12 significant digits.
std::string emit_transform(const SimilarityTransform &t);
SimilarityTransform parse_transform(const std::string &text);
SimilarityTransform read_transform(const std::filesystem::path &path);
void write_transform(const SimilarityTransform &t,
                     const std::filesystem::path &path);

} // namespace holoprep::registration
