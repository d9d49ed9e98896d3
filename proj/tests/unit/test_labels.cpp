#include "support.hpp"

#include "holoprep/core/error.hpp"
#include "holoprep/dataset/labels.hpp"

#include <doctest.h>

#include <cmath>

using namespace holoprep;
using namespace holoprep::dataset;
using core::Annotation;
using core::BBox;
using core::CoordSpace;
using core::LabelSource;

namespace {

Annotation manual(BBox b, int cls = 0) { return {b, cls, std::nullopt, LabelSource::Manual}; }
Annotation automatic(BBox b, std::optional<double> conf, int cls = core::kUnknownClass) {
  return {b, cls, conf, LabelSource::Auto};
}

BBox px(double x0, double y0, double x1, double y1) {
  return BBox::from_corners(x0, y0, x1, y1, CoordSpace::Pixel);
}

} // namespace

TEST_CASE("expansion examples") {
  const BBox b{500, 400, 100, 60, CoordSpace::Pixel};
  const core::Extent big{10000, 10000};
  const auto a = expand_bbox(b, 1.25, big);
  CHECK(a.w == doctest::Approx(111.8034).epsilon(1e-6));
  CHECK(a.h == doctest::Approx(67.0820).epsilon(1e-6));
  CHECK(a.cx == 500);
  CHECK(a.cy == 400);
  const auto c = expand_bbox(b, 1.5, big);
  CHECK(c.w / b.w == doctest::Approx(1.224745).epsilon(1e-6));
  const auto s = expand_bbox(b, 1.5, big, ExpansionMode::Side);
  CHECK(s.w == doctest::Approx(150.0));
  CHECK(s.h == doctest::Approx(90.0));
  CHECK(expand_bbox(b, 1.0, big) == b);
}

TEST_CASE("expansion properties") {
  support::Gen g(61);
  for (int i = 0; i < 2000; ++i) {
    const BBox b = support::random_box(g, 0.001, 0.2);
    const double f = g.uniform(1.0, 3.0);
    const auto a = expand_bbox_unclipped(b, f);
    CHECK(a.area() / b.area() == doctest::Approx(f).epsilon(1e-9));
    CHECK(a.w / a.h == doctest::Approx(b.w / b.h).epsilon(1e-9));
    CHECK(a.cx == b.cx);
    CHECK(a.cy == b.cy);
    const double f2 = g.uniform(f, 3.5);
    const auto bigger = expand_bbox_unclipped(b, f2);
    CHECK(bigger.x0() <= a.x0());
    CHECK(bigger.x1() >= a.x1());
    CHECK(bigger.y0() <= a.y0());
    CHECK(bigger.y1() >= a.y1());

    const auto side = expand_bbox_unclipped(b, f, ExpansionMode::Side);
    CHECK(side.area() / b.area() == doctest::Approx(f * f).epsilon(1e-9));

    const auto clipped = expand_bbox(b, f, {1, 1});
    CHECK(clipped.x0() >= -1e-12);
    CHECK(clipped.y0() >= -1e-12);
    CHECK(clipped.x1() <= 1 + 1e-12);
    CHECK(clipped.y1() <= 1 + 1e-12);
    CHECK(clipped.area() <= a.area() + 1e-12);
  }
}

TEST_CASE("expansion rejects shrinking factors") {
  const BBox b{0.5, 0.5, 0.1, 0.1};
  CHECK_THROWS_AS(expand_bbox(b, 0.9, {1, 1}), Error);
  CHECK_THROWS_AS(expand_bbox(b, std::nan(""), {1, 1}), Error);
}

TEST_CASE("classes come from the image's species tag") {
  core::ImageRecord r;
  r.image_path = "slide.png";
  r.species_tag = 2;
  r.annotations = {automatic({0.2, 0.2, 0.1, 0.1}, 0.9), manual({0.5, 0.5, 0.1, 0.1}, 1),
                   automatic({0.7, 0.7, 0.1, 0.1}, std::nullopt)};
  const auto out = assign_classes_from_image(r);
  CHECK(out.annotations[0].class_id == 2);
  CHECK(out.annotations[1].class_id == 1);
  CHECK(out.annotations[2].class_id == 2);
  CHECK(out.annotations[0].confidence == 0.9);
  r.species_tag.reset();
  CHECK_THROWS_AS(assign_classes_from_image(r), Error);
  r.annotations = {manual({0.5, 0.5, 0.1, 0.1}, 1)};
  CHECK(assign_classes_from_image(r) == r);
}

TEST_CASE("merge keeps only the strongest of a mutually overlapping cluster") {
  // Pairwise IoU: A-B 0.818, A-C 0.818, B-C 0.681.
  const std::vector<Annotation> autos{automatic(px(1, 0, 11, 10), 0.8),
                                      automatic(px(0, 0, 10, 10), 0.9),
                                      automatic(px(0, 1, 10, 11), 0.7)};
  const auto out = merge_labels({}, autos);
  REQUIRE(out.size() == 1);
  CHECK(out[0].confidence == 0.9);
}

TEST_CASE("merge suppression is greedy, not transitive") {
  // IoU 0.6 between neighbours, 1/3 between the ends.
  const std::vector<Annotation> autos{automatic(px(0, 0, 40, 10), 0.9),
                                      automatic(px(10, 0, 50, 10), 0.8),
                                      automatic(px(20, 0, 60, 10), 0.7)};
  const auto out = merge_labels({}, autos);
  REQUIRE(out.size() == 2);
  CHECK(out[0].confidence == 0.9);
  CHECK(out[1].confidence == 0.7);
}

TEST_CASE("manual labels always win") {
  const std::vector<Annotation> manuals{manual(px(0, 0, 10, 10), 3)};
  const std::vector<Annotation> autos{automatic(px(0, 0, 10, 10), 0.99),
                                      automatic(px(50, 50, 60, 60), std::nullopt)};
  const auto out = merge_labels(manuals, autos);
  REQUIRE(out.size() == 2);
  CHECK(out[0] == manuals[0]);
  CHECK(out[1] == autos[1]);
}

TEST_CASE("merge properties over random label sets") {
  support::Gen g(62);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Annotation> manuals, autos;
    const int nm = g.integer(0, 6), na = g.integer(0, 12);
    for (int i = 0; i < nm; ++i)
      manuals.push_back(manual(support::random_box(g, 0.05, 0.4), g.integer(0, 3)));
    for (int i = 0; i < na; ++i)
      autos.push_back(automatic(support::random_box(g, 0.05, 0.4),
                                g.coin(0.9) ? std::optional(g.uniform()) : std::nullopt));
    const double thr = g.uniform(0.2, 0.9);
    const auto out = merge_labels(manuals, autos, thr);

    REQUIRE(out.size() >= manuals.size());
    for (std::size_t i = 0; i < manuals.size(); ++i)
      CHECK(out[i] == manuals[i]);

    const std::vector<Annotation> accepted(out.begin() + nm, out.end());
    // No accepted auto label duplicates any other kept label.
    for (std::size_t i = 0; i < accepted.size(); ++i) {
      for (const auto &m : manuals)
        CHECK(core::iou(accepted[i].box, m.box) < thr);
      for (std::size_t j = i + 1; j < accepted.size(); ++j)
        CHECK(core::iou(accepted[i].box, accepted[j].box) < thr);
    }
    // Every rejected auto label collides with something kept.
    for (const auto &a : autos) {
      if (std::find(accepted.begin(), accepted.end(), a) != accepted.end())
        continue;
      bool hit = false;
      for (const auto &k : out)
        hit = hit || core::iou(a.box, k.box) >= thr;
      CHECK(hit);
    }
    CHECK(merge_labels(manuals, accepted, thr) == out);
  }
}

TEST_CASE("merge rejects bad thresholds and mixed spaces") {
  const std::vector<Annotation> a{automatic({0.5, 0.5, 0.1, 0.1}, 0.5)};
  const std::vector<Annotation> m{manual(px(0, 0, 10, 10))};
  CHECK_THROWS_AS(merge_labels({}, a, 0.0), Error);
  CHECK_THROWS_AS(merge_labels({}, a, 1.5), Error);
  CHECK_THROWS_AS(merge_labels(m, a), Error);
}
