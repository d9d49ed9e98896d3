#include "holoprep/core/similarity.hpp"

#include "holoprep/core/error.hpp"

#include <cmath>

namespace holoprep::core {

SimilarityTransform::SimilarityTransform(double scale, const Mat2 &rotation,
                                         const Vec2 &translation)
    : scale_(scale), rotation_(rotation), translation_(translation) {
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw input_error("similarity scale must be positive and finite");
  if (!rotation.allFinite() || !translation.allFinite())
    throw input_error("similarity transform has non-finite entries");
  const Mat2 gram = rotation.transpose() * rotation;
  if ((gram - Mat2::Identity()).cwiseAbs().maxCoeff() > kTolerance)
    throw input_error("rotation matrix is not orthonormal");
  if (std::abs(rotation.determinant() - 1.0) > kTolerance)
    throw input_error("rotation matrix determinant is not +1");
}

SimilarityTransform SimilarityTransform::from_angle(double scale,
                                                    double radians,
                                                    const Vec2 &translation) {
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  Mat2 r;
  r << c, -s, s, c;
  return {scale, r, translation};
}

double SimilarityTransform::angle() const noexcept {
  return std::atan2(rotation_(1, 0), rotation_(0, 0));
}

SimilarityTransform SimilarityTransform::inverse() const {
  const Mat2 rt = rotation_.transpose();
  const double inv_scale = 1.0 / scale_;
  return {inv_scale, rt, -inv_scale * (rt * translation_)};
}

} // namespace holoprep::core
