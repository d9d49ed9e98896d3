#pragma once

#include <Eigen/Core>
#include <Eigen/LU>

namespace holoprep::core {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

// dst = scale * rotation * src + translation, with a proper rotation
// (orthonormal, det +1) and a positive isotropic scale.
class SimilarityTransform {
public:
  static constexpr double kTolerance = 1e-9;

  SimilarityTransform() = default;
  // Throws when the invariants do not hold to kTolerance.
  SimilarityTransform(double scale, const Mat2 &rotation, const Vec2 &translation);

  static SimilarityTransform identity() { return {}; }
  static SimilarityTransform from_angle(double scale, double radians,
                                        const Vec2 &translation);

  double scale() const noexcept { return scale_; }
  const Mat2 &rotation() const noexcept { return rotation_; }
  const Vec2 &translation() const noexcept { return translation_; }
  // Rotation angle in (-pi, pi].
  double angle() const noexcept;

  Vec2 apply(const Vec2 &p) const noexcept {
    return scale_ * (rotation_ * p) + translation_;
  }

  SimilarityTransform inverse() const;

private:
  double scale_ = 1.0;
  Mat2 rotation_ = Mat2::Identity();
  Vec2 translation_ = Vec2::Zero();
};

} // namespace holoprep::core
