#include "holoprep/cli/synth.hpp"

#include "util.hpp"

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/error.hpp"
#include "holoprep/core/manifest.hpp"
#include "holoprep/core/png_io.hpp"
#include "holoprep/core/random.hpp"
#include "holoprep/core/raster.hpp"
#include "holoprep/registration/registration.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace holoprep::cli {

namespace fs = std::filesystem;
using core::Annotation;
using core::BBox;
using core::CoordSpace;
using core::LabelSource;
using core::Vec2;

namespace {

struct Particle {
  Vec2 center;
  double radius = 0.0;
  int class_id = 0;
};

constexpr std::array<std::array<int, 3>, 6> kPalette{{
    {150, 90, 60},
    {90, 120, 60},
    {170, 140, 40},
    {110, 80, 120},
    {60, 110, 140},
    {140, 60, 90},
}};

// Independent streams for the different random quantities.
enum Stream : std::uint64_t {
  kLayout = 1,
  kOpticalNoise,
  kHoloNoise,
  kLabels,
  kDetections,
};

BBox particle_box(const Particle &p, Vec2 jitter_center, double size_factor,
                  int width, int height) {
  const double side = 2.0 * p.radius * size_factor;
  BBox px{p.center.x() + jitter_center.x(), p.center.y() + jitter_center.y(),
          side, side, CoordSpace::Pixel};
  const auto clipped = core::clip(px, {double(width), double(height)});
  return core::to_normalized(clipped.value_or(px), {double(width), double(height)});
}

} // namespace

SynthInfo write_synthetic_dataset(const fs::path &dir, const SynthOptions &o) {
  if (o.optical_width < 64 || o.optical_height < 64 || o.holo_width < 16 ||
      o.holo_height < 16)
    throw config_error("synth: image dimensions too small");
  if (o.objects < 1 || o.landmarks < 2 || o.landmarks > o.objects)
    throw config_error("synth: need 1+ objects and 2..objects landmarks");
  if (o.class_names.empty())
    throw config_error("synth: class_names must not be empty");
  if (!(o.manual_fraction >= 0.0 && o.manual_fraction <= 1.0))
    throw config_error("synth: manual_fraction must lie in [0,1]");
  detail::ensure_dir(dir);

  const int ow = o.optical_width, oh = o.optical_height;
  const int hw = o.holo_width, hh = o.holo_height;
  const int k = static_cast<int>(o.class_names.size());

  // Holographic frame slightly under-fills the optical width and is rotated a
  // little, so the warped image has black margins.
  const double scale = 0.92 * double(ow) / double(hw);
  const double angle = 2.5 * std::numbers::pi / 180.0;
  const Vec2 holo_center(0.5 * hw, 0.5 * hh);
  const Vec2 target(0.5 * ow + 0.02 * ow, 0.5 * oh - 0.02 * oh);
  const auto rot = core::SimilarityTransform::from_angle(scale, angle, Vec2::Zero());
  const auto truth =
      core::SimilarityTransform::from_angle(scale, angle, target - rot.apply(holo_center));
  const auto truth_inv = truth.inverse();

  // Particle layout: rejection sampling inside the part of the optical frame
  // that the holographic image covers, without overlaps.
  const core::CounterRng layout(o.seed, kLayout);
  std::vector<Particle> particles;
  std::uint64_t counter = 0;
  const double r_lo = 0.006 * ow, r_hi = 0.0125 * ow;
  for (int attempt = 0; attempt < 200 * o.objects &&
                        static_cast<int>(particles.size()) < o.objects;
       ++attempt) {
    Particle p;
    p.radius = layout.uniform(counter++, r_lo, r_hi);
    const double px = layout.uniform(counter++, 0.0, ow);
    const double py = layout.uniform(counter++, 0.0, oh);
    p.center = Vec2(px, py);
    p.class_id = static_cast<int>(layout.below(counter++, static_cast<std::uint64_t>(k)));
    const double m = p.radius + 2.0;
    if (p.center.x() < m || p.center.y() < m || p.center.x() > ow - m ||
        p.center.y() > oh - m)
      continue;
    const Vec2 q = truth_inv.apply(p.center);
    const double mq = m / scale;
    if (q.x() < mq || q.y() < mq || q.x() > hw - mq || q.y() > hh - mq)
      continue;
    bool overlaps = false;
    for (const auto &other : particles)
      if ((other.center - p.center).norm() < other.radius + p.radius + 4.0)
        overlaps = true;
    if (!overlaps)
      particles.push_back(p);
  }
  if (static_cast<int>(particles.size()) < o.landmarks)
    throw config_error("synth: could not place enough particles; lower 'objects'");

  const auto nearest = [&](const Vec2 &p) {
    double best = std::numeric_limits<double>::infinity();
    const Particle *hit = nullptr;
    for (const auto &q : particles) {
      const double d = (q.center - p).norm() - q.radius;
      if (d < best) {
        best = d;
        hit = &q;
      }
    }
    return std::pair{hit, best};
  };

  // Optical RGB: pale background, coloured discs, mild noise. Values never
  // reach 0 so that black only ever means "outside the frame".
  const core::CounterRng onoise(o.seed, kOpticalNoise);
  core::Raster optical(ow, oh, 3);
  for (int y = 0; y < oh; ++y)
    for (int x = 0; x < ow; ++x) {
      const auto [hit, d] = nearest(Vec2(x + 0.5, y + 0.5));
      std::array<double, 3> rgb{205.0, 195.0, 175.0};
      if (d < 0.0) {
        const auto &c = kPalette[static_cast<std::size_t>(hit->class_id) % kPalette.size()];
        rgb = {double(c[0]), double(c[1]), double(c[2])};
      }
      const std::uint64_t base = (static_cast<std::uint64_t>(y) * ow + x) * 3;
      for (int c = 0; c < 3; ++c)
        optical.at(x, y, c) = core::clamp_to_u8(
            std::max(1.0, rgb[c] + onoise.uniform(base + c, -6.0, 6.0)));
    }

  // Holographic grey: dark particle cores with decaying fringes.
  const core::CounterRng hnoise(o.seed, kHoloNoise);
  core::Raster holo(hw, hh, 1);
  for (int y = 0; y < hh; ++y)
    for (int x = 0; x < hw; ++x) {
      const Vec2 p = truth.apply(Vec2(x + 0.5, y + 0.5));
      const auto [hit, d] = nearest(p);
      double v = 150.0;
      if (d < 0.0)
        v = 70.0;
      else
        v += 30.0 * std::cos(0.35 * d) * std::exp(-d / (2.0 * hit->radius));
      v += hnoise.uniform(static_cast<std::uint64_t>(y) * hw + x, -5.0, 5.0);
      holo.at(x, y) = core::clamp_to_u8(std::max(1.0, v));
    }

  // Labels.
  const core::CounterRng lrng(o.seed, kLabels);
  std::vector<Annotation> manual, automatic;
  counter = 0;
  for (const auto &p : particles) {
    if (lrng.uniform(counter++) < o.manual_fraction)
      manual.push_back({particle_box(p, Vec2::Zero(), 1.0, ow, oh), p.class_id,
                        std::nullopt, LabelSource::Manual});
    const double jx = lrng.uniform(counter++, -2.0, 2.0);
    const double jy = lrng.uniform(counter++, -2.0, 2.0);
    const Vec2 jc(jx, jy);
    const double sf = lrng.uniform(counter++, 0.92, 1.08);
    automatic.push_back({particle_box(p, jc, sf, ow, oh), core::kUnknownClass,
                         lrng.uniform(counter++, 0.5, 0.99), LabelSource::Auto});
  }
  for (int i = 0; i < std::max(1, o.objects / 10); ++i) {
    const BBox px{lrng.uniform(counter++, 0.1 * ow, 0.9 * ow),
                  lrng.uniform(counter++, 0.1 * oh, 0.9 * oh), 2.0 * r_lo, 2.0 * r_lo,
                  CoordSpace::Pixel};
    automatic.push_back({core::to_normalized(px, {double(ow), double(oh)}),
                         core::kUnknownClass, lrng.uniform(counter++, 0.05, 0.5),
                         LabelSource::Auto});
  }

  // A mock detector: finds most particles, sometimes with the wrong class,
  // plus a few false alarms.
  const core::CounterRng drng(o.seed, kDetections);
  std::vector<Annotation> detections;
  counter = 0;
  for (const auto &p : particles) {
    const bool found = drng.uniform(counter++) < 0.9;
    const bool correct = drng.uniform(counter++) < 0.85;
    const int wrong = static_cast<int>(drng.below(counter++, static_cast<std::uint64_t>(k)));
    const double jx = drng.uniform(counter++, -3.0, 3.0);
    const double jy = drng.uniform(counter++, -3.0, 3.0);
    const Vec2 jc(jx, jy);
    const double sf = drng.uniform(counter++, 0.85, 1.15);
    const double conf = drng.uniform(counter++, 0.3, 0.99);
    if (!found)
      continue;
    detections.push_back({particle_box(p, jc, sf, ow, oh),
                          correct ? p.class_id : wrong, conf, LabelSource::Auto});
  }
  for (int i = 0; i < std::max(1, o.objects / 8); ++i) {
    const BBox px{drng.uniform(counter++, 0.1 * ow, 0.9 * ow),
                  drng.uniform(counter++, 0.1 * oh, 0.9 * oh), 2.0 * r_lo, 2.0 * r_lo,
                  CoordSpace::Pixel};
    detections.push_back(
        {core::to_normalized(px, {double(ow), double(oh)}),
         static_cast<int>(drng.below(counter++, static_cast<std::uint64_t>(k))),
         drng.uniform(counter++, 0.05, 0.6), LabelSource::Auto});
  }

  std::vector<registration::PointPair> pairs;
  for (int i = 0; i < o.landmarks; ++i) {
    const Vec2 dst = particles[static_cast<std::size_t>(i)].center;
    pairs.push_back({truth_inv.apply(dst), dst});
  }

  core::write_png(optical, dir / "optical.png");
  core::write_png(holo, dir / "holo.png");
  core::write_label_file((dir / "optical_auto.txt").string(), automatic);
  core::write_label_file((dir / "detections.txt").string(), detections);
  detail::write_text(dir / "pairs.csv", registration::emit_point_pairs(pairs));
  registration::write_transform(truth, dir / "truth_transform.txt");

  core::DatasetManifest manifest;
  manifest.class_names = o.class_names;
  manifest.records.push_back({"optical.png", core::Modality::Optical, std::nullopt,
                              "optical.txt", manual, false});
  manifest.records.push_back(
      {"holo.png", core::Modality::Holographic, std::nullopt, "", {}, false});
  core::save_manifest(manifest, dir / "dataset.json");

  SynthInfo info;
  info.truth = truth;
  info.objects = static_cast<int>(particles.size());
  info.manual_labels = static_cast<int>(manual.size());
  info.auto_labels = static_cast<int>(automatic.size());
  info.detections = static_cast<int>(detections.size());
  return info;
}

} // namespace holoprep::cli
