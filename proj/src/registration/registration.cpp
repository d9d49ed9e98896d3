#include "holoprep/registration/registration.hpp"

#include "holoprep/core/error.hpp"

#include <Eigen/SVD>
#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <sstream>

namespace holoprep::registration {

using core::Mat2;

namespace {

constexpr double kDegenerateRatio = 1e-9;

} // namespace

RegistrationReport estimate_similarity(std::span<const PointPair> pairs) {
  const auto n = static_cast<int>(pairs.size());
  if (n < 2)
    throw input_error(
        fmt::format("similarity estimation needs >= 2 point pairs, got {}", n));
  for (const auto &p : pairs)
    if (!p.src.allFinite() || !p.dst.allFinite())
      throw input_error("point pair with non-finite coordinate");

  // Centroids.
  Vec2 mu_src = Vec2::Zero(), mu_dst = Vec2::Zero();
  for (const auto &p : pairs) {
    mu_src += p.src;
    mu_dst += p.dst;
  }
  mu_src /= n;
  mu_dst /= n;

  // Demeaned spread of each set (RMS distance to the centroid).
  double var_src = 0.0, var_dst = 0.0;
  for (const auto &p : pairs) {
    var_src += (p.src - mu_src).squaredNorm();
    var_dst += (p.dst - mu_dst).squaredNorm();
  }
  var_src /= n;
  var_dst /= n;
  const double norm_src = std::sqrt(var_src);
  const double norm_dst = std::sqrt(var_dst);
  const double extent = std::max(mu_src.cwiseAbs().maxCoeff(), 1.0);
  if (!(norm_src > 1e-12 * extent))
    throw input_error("source points are coincident; scale is undefined");
  if (!(norm_dst > 0.0))
    throw input_error("destination points are coincident; scale is zero");

  // Cross-covariance of the unit-spread point sets.
  Mat2 cov = Mat2::Zero();
  for (const auto &p : pairs)
    cov += ((p.dst - mu_dst) / norm_dst) * ((p.src - mu_src) / norm_src).transpose();
  cov /= n;

  // Optimal proper rotation; flip the weakest axis if the SVD basis would
  // otherwise produce a reflection.
  Eigen::JacobiSVD<Mat2> svd(cov, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector2d sv = svd.singularValues();
  Mat2 sign = Mat2::Identity();
  if (svd.matrixU().determinant() * svd.matrixV().determinant() < 0.0)
    sign(1, 1) = -1.0;
  Mat2 rot = svd.matrixU() * sign * svd.matrixV().transpose();

  // Re-orthonormalize against round-off before the invariant check.
  const double angle = std::atan2(rot(1, 0), rot(0, 0));
  rot << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);

  const double correlation = sv(0) + sign(1, 1) * sv(1);
  const double scale = correlation * norm_dst / norm_src;
  if (!(scale > 0.0))
    throw input_error("point sets are uncorrelated; scale is not positive");

  const Vec2 translation = mu_dst - scale * (rot * mu_src);

  RegistrationReport report{
      SimilarityTransform(scale, rot, translation), 0.0, n, sv(0), sv(1),
      sv(1) < kDegenerateRatio * sv(0)};
  report.rms_residual = rms_residual(report.transform, pairs);
  return report;
}

Vec2 apply_to_point(const SimilarityTransform &t, const Vec2 &p) noexcept {
  return t.apply(p);
}

SimilarityTransform invert(const SimilarityTransform &t) { return t.inverse(); }

core::BBox map_bbox(const SimilarityTransform &t, const core::BBox &b) {
  if (b.space != core::CoordSpace::Pixel)
    throw input_error("map_bbox expects a pixel-space box");
  const Vec2 corners[4] = {{b.x0(), b.y0()},
                           {b.x1(), b.y0()},
                           {b.x1(), b.y1()},
                           {b.x0(), b.y1()}};
  Vec2 lo = t.apply(corners[0]);
  Vec2 hi = lo;
  for (int i = 1; i < 4; ++i) {
    const Vec2 q = t.apply(corners[i]);
    lo = lo.cwiseMin(q);
    hi = hi.cwiseMax(q);
  }
  return core::BBox::from_corners(lo.x(), lo.y(), hi.x(), hi.y(),
                                  core::CoordSpace::Pixel);
}

double rms_residual(const SimilarityTransform &t,
                    std::span<const PointPair> pairs) {
  if (pairs.empty())
    return 0.0;
  double sum = 0.0;
  for (const auto &p : pairs)
    sum += (t.apply(p.src) - p.dst).squaredNorm();
  return std::sqrt(sum / static_cast<double>(pairs.size()));
}

std::vector<PointPair> parse_point_pairs(const std::string &text) {
  std::istringstream in(text);
  std::string line;
  std::vector<PointPair> pairs;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos)
      continue;
    if (!header_seen) {
      std::string compact;
      for (char ch : line)
        if (ch != ' ' && ch != '\t')
          compact += ch;
      if (compact != "x_src,y_src,x_dst,y_dst")
        throw input_error(fmt::format(
            "point-pair file line {}: expected header x_src,y_src,x_dst,y_dst",
            line_no));
      header_seen = true;
      continue;
    }
    double v[4];
    std::istringstream fields(line);
    std::string cell;
    int k = 0;
    while (std::getline(fields, cell, ',')) {
      if (k >= 4)
        throw input_error(
            fmt::format("point-pair file line {}: too many fields", line_no));
      try {
        std::size_t used = 0;
        v[k] = std::stod(cell, &used);
        if (cell.find_first_not_of(" \t", used) != std::string::npos)
          throw std::invalid_argument(cell);
      } catch (const std::exception &) {
        throw input_error(fmt::format(
            "point-pair file line {}: non-numeric field '{}'", line_no, cell));
      }
      ++k;
    }
    if (k != 4)
      throw input_error(
          fmt::format("point-pair file line {}: expected 4 fields", line_no));
    pairs.push_back({Vec2(v[0], v[1]), Vec2(v[2], v[3])});
  }
  if (!header_seen)
    throw input_error("point-pair file is empty");
  return pairs;
}

std::vector<PointPair> read_point_pairs(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open point-pair file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_point_pairs(ss.str());
}

std::string emit_point_pairs(std::span<const PointPair> pairs) {
  std::string out = "x_src,y_src,x_dst,y_dst\n";
  for (const auto &p : pairs)
    out += fmt::format("{:.17g},{:.17g},{:.17g},{:.17g}\n", p.src.x(),
                       p.src.y(), p.dst.x(), p.dst.y());
  return out;
}

std::string emit_transform(const SimilarityTransform &t) {
  const Mat2 &r = t.rotation();
  return fmt::format("{:.12g}\n{:.12g}\n{:.12g}\n{:.12g}\n{:.12g}\n{:.12g}\n{:.12g}\n",
                     t.scale(), r(0, 0), r(0, 1), r(1, 0), r(1, 1),
                     t.translation().x(), t.translation().y());
}

SimilarityTransform parse_transform(const std::string &text) {
  std::istringstream in(text);
  double v[7];
  for (double &x : v)
    if (!(in >> x))
      throw input_error("transform file must hold 7 numbers: scale r00 r01 "
                        "r10 r11 tx ty");
  std::string extra;
  if (in >> extra)
    throw input_error("transform file has trailing content");
  Mat2 r;
  r << v[1], v[2], v[3], v[4];
  // 12 significant digits leave ~1e-12 round-off; snap back onto SO(2).
  const double angle = std::atan2(r(1, 0), r(0, 0));
  Mat2 snapped;
  snapped << std::cos(angle), -std::sin(angle), std::sin(angle),
      std::cos(angle);
  if ((snapped - r).cwiseAbs().maxCoeff() > 1e-9)
    throw input_error("transform rotation is not a proper rotation");
  return {v[0], snapped, Vec2(v[5], v[6])};
}

SimilarityTransform read_transform(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open transform file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_transform(ss.str());
}

void write_transform(const SimilarityTransform &t,
                     const std::filesystem::path &path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw io_error("cannot write transform file " + path.string());
  out << emit_transform(t);
  if (!out)
    throw io_error("write failed for " + path.string());
}

} // namespace holoprep::registration
