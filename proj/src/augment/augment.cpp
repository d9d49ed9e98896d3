#include "holoprep/augment/augment.hpp"

#include "holoprep/core/error.hpp"
#include "holoprep/core/random.hpp"
#include "holoprep/core/similarity.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

namespace holoprep::augment {

using core::Annotation;
using core::BBox;
using core::CoordSpace;
using core::Raster;
using core::Vec2;

namespace {

// Fixed counter slot per random quantity so enabling one stage never shifts
// the values drawn for another.
enum Slot : std::uint64_t {
  kAngle,
  kHflip,
  kVflip,
  kShiftX,
  kShiftY,
  kKeep,
  kCropU,
  kCropV,
  kBrightness,
  kContrast,
  kSaturation,
  kHue,
  kMixupTrigger,
  kMixupLambda,
  kMixupPartner,
  kSlotCount
};

constexpr std::uint64_t kAugmentStream = 0x4155474dULL; // "AUGM"

void check_probability(double p, const char *name) {
  if (!(p >= 0.0 && p <= 1.0))
    throw config_error(fmt::format("{} must be in [0,1], got {}", name, p));
}

void check_non_negative(double v, const char *name) {
  if (!(v >= 0.0) || !std::isfinite(v))
    throw config_error(fmt::format("{} must be >= 0, got {}", name, v));
}

// Geometry of the composed stages, expressed as per-stage forward maps in
// continuous pixel coordinates.
struct Geometry {
  double width, height;
  AugmentDraw d;
  core::Mat2 rot;     // forward rotation about the center
  double crop_x, crop_y, crop_w, crop_h;

  Geometry(int w, int h, const AugmentDraw &draw)
      : width(w), height(h), d(draw) {
    const double rad = d.angle_deg * std::numbers::pi / 180.0;
    rot << std::cos(rad), -std::sin(rad), std::sin(rad), std::cos(rad);
    const double side = std::sqrt(d.keep);
    crop_w = side * width;
    crop_h = side * height;
    crop_x = d.crop_u * (width - crop_w);
    crop_y = d.crop_v * (height - crop_h);
  }

  Vec2 center() const { return {0.5 * width, 0.5 * height}; }

  bool inside(const Vec2 &p) const {
    return p.x() >= 0.0 && p.y() >= 0.0 && p.x() < width && p.y() < height;
  }

  // Output point -> source point, or nullopt when some stage filled it black.
  std::optional<Vec2> inverse(Vec2 p) const {
    // resized crop
    p = {crop_x + p.x() * crop_w / width, crop_y + p.y() * crop_h / height};
    // translation
    p -= Vec2(d.shift_x * width, d.shift_y * height);
    if (!inside(p))
      return std::nullopt;
    // flips
    if (d.hflip)
      p.x() = width - p.x();
    if (d.vflip)
      p.y() = height - p.y();
    // rotation
    p = rot.transpose() * (p - center()) + center();
    if (!inside(p))
      return std::nullopt;
    return p;
  }

  std::optional<BBox> forward(const BBox &px) const {
    const core::Extent frame{width, height};
    // rotation: hull of the rotated corners
    Vec2 lo(INFINITY, INFINITY), hi(-INFINITY, -INFINITY);
    for (const Vec2 &c : {Vec2(px.x0(), px.y0()), Vec2(px.x1(), px.y0()),
                          Vec2(px.x1(), px.y1()), Vec2(px.x0(), px.y1())}) {
      const Vec2 q = rot * (c - center()) + center();
      lo = lo.cwiseMin(q);
      hi = hi.cwiseMax(q);
    }
    auto b = core::clip(BBox::from_corners(lo.x(), lo.y(), hi.x(), hi.y(),
                                           CoordSpace::Pixel),
                        frame);
    if (!b)
      return std::nullopt;
    if (d.hflip)
      b->cx = width - b->cx;
    if (d.vflip)
      b->cy = height - b->cy;
    b->cx += d.shift_x * width;
    b->cy += d.shift_y * height;
    b = core::clip(*b, frame);
    if (!b)
      return std::nullopt;
    const double sx = width / crop_w;
    const double sy = height / crop_h;
    BBox cropped{(b->cx - crop_x) * sx, (b->cy - crop_y) * sy, b->w * sx,
                 b->h * sy, CoordSpace::Pixel};
    return core::clip(cropped, frame);
  }
};

bool has_geometry(const AugmentDraw &d) {
  return d.angle_deg != 0.0 || d.hflip || d.vflip || d.shift_x != 0.0 ||
         d.shift_y != 0.0 || d.keep != 1.0;
}

Raster resample(const Raster &src, const Geometry &g) {
  Raster out(src.width(), src.height(), src.channels(), 0);
  for (int y = 0; y < out.height(); ++y) {
    for (int x = 0; x < out.width(); ++x) {
      const auto p = g.inverse({x + 0.5, y + 0.5});
      if (!p)
        continue;
      for (int c = 0; c < src.channels(); ++c)
        out.at(x, y, c) = core::clamp_to_u8(core::sample_bilinear(src, p->x(), p->y(), c));
    }
  }
  return out;
}

double luma(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

void rgb_to_hsv(double r, double g, double b, double &h, double &s, double &v) {
  const double mx = std::max({r, g, b});
  const double mn = std::min({r, g, b});
  const double delta = mx - mn;
  v = mx;
  s = mx > 0.0 ? delta / mx : 0.0;
  if (delta <= 0.0) {
    h = 0.0;
    return;
  }
  if (mx == r)
    h = (g - b) / delta;
  else if (mx == g)
    h = 2.0 + (b - r) / delta;
  else
    h = 4.0 + (r - g) / delta;
  h /= 6.0;
  h -= std::floor(h);
}

void hsv_to_rgb(double h, double s, double v, double &r, double &g, double &b) {
  const double h6 = (h - std::floor(h)) * 6.0;
  const int sector = static_cast<int>(h6) % 6;
  const double f = h6 - std::floor(h6);
  const double p = v * (1.0 - s);
  const double q = v * (1.0 - s * f);
  const double t = v * (1.0 - s * (1.0 - f));
  switch (sector) {
  case 0: r = v; g = t; b = p; break;
  case 1: r = q; g = v; b = p; break;
  case 2: r = p; g = v; b = t; break;
  case 3: r = p; g = q; b = v; break;
  case 4: r = t; g = p; b = v; break;
  default: r = v; g = p; b = q; break;
  }
}

// Brightness, contrast, saturation, hue; each stage clamps to [0,255].
// Greyscale rasters skip saturation and hue.
void apply_jitter(Raster &r, const AugmentDraw &d) {
  const bool rgb = r.channels() == 3;
  const bool active = d.brightness != 1.0 || d.contrast != 1.0 ||
                      (rgb && (d.saturation != 1.0 || d.hue_shift != 0.0));
  if (!active)
    return;
  const auto data = r.data();
  std::vector<double> buf(data.begin(), data.end());
  const auto clamp = [](double v) { return std::clamp(v, 0.0, 255.0); };
  const std::size_t ch = static_cast<std::size_t>(r.channels());

  if (d.brightness != 1.0)
    for (double &v : buf)
      v = clamp(v * d.brightness);

  if (d.contrast != 1.0) {
    double mean = 0.0;
    for (std::size_t i = 0; i < buf.size(); i += ch)
      mean += rgb ? luma(buf[i], buf[i + 1], buf[i + 2]) : buf[i];
    mean /= static_cast<double>(r.pixel_count());
    for (double &v : buf)
      v = clamp((v - mean) * d.contrast + mean);
  }

  if (rgb && d.saturation != 1.0)
    for (std::size_t i = 0; i < buf.size(); i += 3) {
      const double g = luma(buf[i], buf[i + 1], buf[i + 2]);
      for (std::size_t c = 0; c < 3; ++c)
        buf[i + c] = clamp(g + (buf[i + c] - g) * d.saturation);
    }

  if (rgb && d.hue_shift != 0.0)
    for (std::size_t i = 0; i < buf.size(); i += 3) {
      double h, s, v;
      rgb_to_hsv(buf[i], buf[i + 1], buf[i + 2], h, s, v);
      hsv_to_rgb(h + d.hue_shift, s, v, buf[i], buf[i + 1], buf[i + 2]);
    }

  for (std::size_t i = 0; i < buf.size(); ++i)
    data[i] = core::clamp_to_u8(buf[i]);
}

} // namespace

void validate(const AugmentationPolicy &p) {
  check_non_negative(p.max_rotation, "max_rotation");
  if (p.max_rotation > 180.0)
    throw config_error("max_rotation must be <= 180 degrees");
  check_probability(p.hflip_p, "hflip_p");
  check_probability(p.vflip_p, "vflip_p");
  check_probability(p.mixup_p, "mixup_p");
  check_non_negative(p.translate_max, "translate_max");
  if (p.translate_max > 1.0)
    throw config_error("translate_max must be <= 1");
  const auto [lo, hi] = p.crop_keep_range;
  if (!(lo > 0.0 && lo <= hi && hi <= 1.0))
    throw config_error(fmt::format(
        "crop_keep_range must satisfy 0 < lo <= hi <= 1, got ({}, {})", lo, hi));
  check_non_negative(p.jitter.brightness, "jitter.brightness");
  check_non_negative(p.jitter.contrast, "jitter.contrast");
  check_non_negative(p.jitter.saturation, "jitter.saturation");
  check_non_negative(p.jitter.hue, "jitter.hue");
  if (p.jitter.brightness > 1.0 || p.jitter.contrast > 1.0 ||
      p.jitter.saturation > 1.0)
    throw config_error("brightness/contrast/saturation jitter must be <= 1");
  if (p.jitter.hue > 0.5)
    throw config_error("hue jitter must be <= 0.5");
  const auto [llo, lhi] = p.mixup_lambda_range;
  if (!(llo >= 0.0 && llo <= lhi && lhi <= 1.0))
    throw config_error("mixup_lambda_range must satisfy 0 <= lo <= hi <= 1");
}

AugmentationPolicy detection_policy_default() {
  AugmentationPolicy p;
  p.max_rotation = 45.0;
  p.vflip_p = 0.5;
  p.mixup_p = 0.10;
  return p;
}

AugmentationPolicy classification_policy_default() {
  AugmentationPolicy p;
  p.max_rotation = 40.0;
  p.hflip_p = 0.5;
  p.translate_max = 0.20;
  p.crop_keep_range = {0.80, 1.00};
  p.jitter = {0.20, 0.20, 0.20, 0.10};
  return p;
}

AugmentDraw draw_parameters(const AugmentationPolicy &p,
                            std::uint64_t draw_index) {
  validate(p);
  const core::CounterRng rng(p.seed, kAugmentStream + draw_index * kSlotCount);
  const auto sym = [&](Slot s, double half) {
    return half == 0.0 ? 0.0 : rng.uniform(s, -half, half);
  };
  AugmentDraw d;
  d.angle_deg = sym(kAngle, p.max_rotation);
  d.hflip = rng.uniform(kHflip) < p.hflip_p;
  d.vflip = rng.uniform(kVflip) < p.vflip_p;
  d.shift_x = sym(kShiftX, p.translate_max);
  d.shift_y = sym(kShiftY, p.translate_max);
  const auto [lo, hi] = p.crop_keep_range;
  d.keep = lo == hi ? lo : rng.uniform(kKeep, lo, hi);
  d.crop_u = rng.uniform(kCropU);
  d.crop_v = rng.uniform(kCropV);
  d.brightness = 1.0 + sym(kBrightness, p.jitter.brightness);
  d.contrast = 1.0 + sym(kContrast, p.jitter.contrast);
  d.saturation = 1.0 + sym(kSaturation, p.jitter.saturation);
  d.hue_shift = sym(kHue, p.jitter.hue);
  return d;
}

AugmentResult apply_draw(const Raster &r, std::span<const Annotation> annotations,
                         const AugmentDraw &draw) {
  if (r.empty())
    throw input_error("cannot augment an empty raster");
  if (!(draw.keep > 0.0 && draw.keep <= 1.0))
    throw input_error("crop keep fraction must be in (0,1]");
  AugmentResult out{r, {}, 0, draw};
  const core::Extent frame{static_cast<double>(r.width()),
                           static_cast<double>(r.height())};

  if (has_geometry(draw)) {
    const Geometry g(r.width(), r.height(), draw);
    out.raster = resample(r, g);
    for (const Annotation &a : annotations) {
      if (a.box.space != CoordSpace::Normalized)
        throw input_error("augment expects normalized annotations");
      if (auto b = g.forward(core::to_pixels(a.box, frame))) {
        Annotation moved = a;
        moved.box = core::to_normalized(*b, frame);
        out.annotations.push_back(moved);
      } else {
        ++out.dropped;
      }
    }
  } else {
    out.annotations.assign(annotations.begin(), annotations.end());
  }

  apply_jitter(out.raster, draw);
  return out;
}

AugmentResult augment(const Raster &r, std::span<const Annotation> annotations,
                      const AugmentationPolicy &policy, std::uint64_t draw_index) {
  return apply_draw(r, annotations, draw_parameters(policy, draw_index));
}

MixupDraw draw_mixup(const AugmentationPolicy &p, std::uint64_t draw_index,
                     std::size_t self_index, std::size_t n_candidates) {
  validate(p);
  const core::CounterRng rng(p.seed, kAugmentStream + draw_index * kSlotCount);
  MixupDraw m;
  if (n_candidates < 2 || !(rng.uniform(kMixupTrigger) < p.mixup_p))
    return m;
  m.triggered = true;
  const auto [lo, hi] = p.mixup_lambda_range;
  m.lambda = rng.uniform(kMixupLambda, lo, hi);
  // Uniform over the other candidates.
  m.partner = rng.below(kMixupPartner, n_candidates - 1);
  if (m.partner >= self_index)
    ++m.partner;
  return m;
}

Raster mixup(const Raster &a, const Raster &b, double lambda) {
  if (a.width() != b.width() || a.height() != b.height() ||
      a.channels() != b.channels())
    throw input_error(fmt::format("mixup shape mismatch: {}x{}x{} vs {}x{}x{}",
                                  a.width(), a.height(), a.channels(), b.width(),
                                  b.height(), b.channels()));
  if (!(lambda >= 0.0 && lambda <= 1.0))
    throw input_error("mixup lambda must be in [0,1]");
  Raster out(a.width(), a.height(), a.channels());
  const auto pa = a.data();
  const auto pb = b.data();
  auto po = out.data();
  for (std::size_t i = 0; i < po.size(); ++i)
    po[i] = core::clamp_to_u8(lambda * pa[i] + (1.0 - lambda) * pb[i]);
  return out;
}

} // namespace holoprep::augment
