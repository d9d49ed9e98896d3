#include "support.hpp"

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/bbox.hpp"
#include "holoprep/core/error.hpp"
#include "holoprep/core/png_io.hpp"
#include "holoprep/core/random.hpp"
#include "holoprep/core/raster.hpp"
#include "holoprep/core/similarity.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace holoprep;
using namespace holoprep::core;

TEST_CASE("raster construction enforces its invariants") {
  CHECK_THROWS_AS(Raster(0, 4, 1), Error);
  CHECK_THROWS_AS(Raster(4, 4, 2), Error);
  CHECK_THROWS_AS(Raster(2, 2, 3, std::vector<std::uint8_t>(11)), Error);
  const Raster r(3, 2, 3, 7);
  CHECK(r.data().size() == 18);
  CHECK(r.at(2, 1, 2) == 7);
}

TEST_CASE("crop copies the requested rectangle") {
  support::Gen g(1);
  const auto r = support::random_raster(g, 9, 7, 3);
  const auto c = crop(r, 2, 3, 4, 2);
  CHECK(c.width() == 4);
  CHECK(c.height() == 2);
  for (int y = 0; y < 2; ++y)
    for (int x = 0; x < 4; ++x)
      for (int ch = 0; ch < 3; ++ch)
        CHECK(c.at(x, y, ch) == r.at(x + 2, y + 3, ch));
  CHECK_THROWS_AS(crop(r, 6, 0, 4, 1), Error);
}

TEST_CASE("bilinear resize keeps constants and same-size images") {
  const Raster flat(5, 4, 1, 93);
  const auto up = resize_bilinear(flat, 17, 3);
  for (auto v : up.data())
    CHECK(v == 93);
  support::Gen g(2);
  const auto r = support::random_raster(g, 6, 5, 3);
  CHECK(resize_bilinear(r, 6, 5) == r);
}

TEST_CASE("clamp_to_u8 rounds half away from zero and saturates") {
  CHECK(clamp_to_u8(-3.0) == 0);
  CHECK(clamp_to_u8(2.5) == 3);
  CHECK(clamp_to_u8(2.49) == 2);
  CHECK(clamp_to_u8(254.5) == 255);
  CHECK(clamp_to_u8(1e9) == 255);
}

TEST_CASE("png round-trip is lossless for grey and rgb") {
  const auto dir = support::temp_dir("png");
  support::Gen g(3);
  for (int channels : {1, 3}) {
    const auto r = support::random_raster(g, 31, 17, channels);
    const auto path = dir / ("img" + std::to_string(channels) + ".png");
    write_png(r, path);
    CHECK(read_png(path) == r);
  }
  CHECK_THROWS_AS(read_png(dir / "missing.png"), Error);
}

TEST_CASE("png writing is byte-deterministic") {
  const auto dir = support::temp_dir("png_det");
  support::Gen g(4);
  const auto r = support::random_raster(g, 40, 12, 3);
  write_png(r, dir / "a.png");
  write_png(r, dir / "b.png");
  CHECK(support::slurp(dir / "a.png") == support::slurp(dir / "b.png"));
}

TEST_CASE("iou examples") {
  const BBox a = BBox::from_corners(0, 0, 2, 2, CoordSpace::Pixel);
  const BBox b = BBox::from_corners(1, 1, 3, 3, CoordSpace::Pixel);
  const BBox far = BBox::from_corners(10, 10, 11, 11, CoordSpace::Pixel);
  CHECK(iou(a, a) == doctest::Approx(1.0));
  CHECK(iou(a, far) == 0.0);
  CHECK(iou(a, b) == doctest::Approx(1.0 / 7.0).epsilon(1e-12));
  BBox n = a;
  n.space = CoordSpace::Normalized;
  CHECK_THROWS_AS(iou(a, n), Error);
}

TEST_CASE("iou is symmetric, reflexive and bounded") {
  support::Gen g(5);
  for (int i = 0; i < 2000; ++i) {
    const BBox a = support::random_box(g);
    const BBox b = support::random_box(g);
    const double ab = iou(a, b);
    CHECK(ab == iou(b, a));
    CHECK(ab >= 0.0);
    CHECK(ab <= 1.0);
    CHECK(iou(a, a) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("iou shrinks as the intersection shrinks") {
  const BBox a = BBox::from_corners(0, 0, 4, 4, CoordSpace::Pixel);
  double prev = 1.0;
  for (double shift = 0.5; shift < 4.0; shift += 0.5) {
    const BBox b = BBox::from_corners(shift, 0, 4 + shift, 4, CoordSpace::Pixel);
    const double v = iou(a, b);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("clip and coordinate conversion") {
  const BBox b{9.0, 5.0, 4.0, 4.0, CoordSpace::Pixel};
  const auto c = clip(b, {10.0, 6.0});
  REQUIRE(c);
  CHECK(c->x0() == doctest::Approx(7.0));
  CHECK(c->x1() == doctest::Approx(10.0));
  CHECK(c->y0() == doctest::Approx(3.0));
  CHECK(c->y1() == doctest::Approx(6.0));
  CHECK_FALSE(clip(BBox{20, 20, 2, 2, CoordSpace::Pixel}, {10, 10}));

  support::Gen g(6);
  for (int i = 0; i < 200; ++i) {
    const BBox n = support::random_box(g);
    const Extent e{g.uniform(10, 5000), g.uniform(10, 5000)};
    const BBox back = to_normalized(to_pixels(n, e), e);
    CHECK(back.cx == doctest::Approx(n.cx).epsilon(1e-12));
    CHECK(back.h == doctest::Approx(n.h).epsilon(1e-12));
  }
}

TEST_CASE("box validation") {
  CHECK_THROWS_AS(validate(BBox{0.5, 0.5, 0.0, 0.1}), Error);
  CHECK_THROWS_AS(validate(BBox{1.2, 0.5, 0.1, 0.1}), Error);
  CHECK_THROWS_AS(validate(BBox{NAN, 0.5, 0.1, 0.1}), Error);
  CHECK_NOTHROW(validate(BBox{1200, 0.5, 3, 3, CoordSpace::Pixel}));
}

TEST_CASE("annotation invariants") {
  Annotation a{{0.5, 0.5, 0.1, 0.1}, kUnknownClass, std::nullopt, LabelSource::Manual};
  CHECK_THROWS_AS(validate(a), Error);
  a.source = LabelSource::Auto;
  CHECK_NOTHROW(validate(a));
  a.confidence = 1.5;
  CHECK_THROWS_AS(validate(a), Error);
  a = {{0.5, 0.5, 0.1, 0.1}, 2, 0.4, LabelSource::Manual};
  CHECK_THROWS_AS(validate(a), Error);
}

TEST_CASE("parse label file examples") {
  auto r = parse_label_file("0 0.5 0.5 0.1 0.1");
  REQUIRE(r.annotations.size() == 1);
  CHECK(r.issues.empty());
  CHECK(r.annotations[0].class_id == 0);
  CHECK(r.annotations[0].box.cx == 0.5);
  CHECK(r.annotations[0].box.w == 0.1);
  CHECK(r.annotations[0].source == LabelSource::Manual);
  CHECK_FALSE(r.annotations[0].confidence);

  CHECK(parse_label_file("").annotations.empty());
  CHECK(parse_label_file("").issues.empty());

  r = parse_label_file("-1 0.2 0.3 0.05 0.05 0.91");
  REQUIRE(r.annotations.size() == 1);
  CHECK(r.annotations[0].class_id == kUnknownClass);
  CHECK(r.annotations[0].confidence == doctest::Approx(0.91));
  CHECK(r.annotations[0].source == LabelSource::Auto);
  const std::string emitted = emit_label_file(r.annotations);
  CHECK(emitted == "-1 0.200000 0.300000 0.050000 0.050000 0.910000\n");
  const auto again = parse_label_file(emitted);
  CHECK(again.annotations == r.annotations);
}

TEST_CASE("parse reports bad lines and keeps good ones") {
  const auto r = parse_label_file("0 0.5 0.5 0.1 0.1\n"
                                  "x 0.5 0.5 0.1 0.1\n"
                                  "\n"
                                  "1 0.5 0.5 0.1\n"
                                  "1 0.5 0.5 -0.1 0.1\n"
                                  "1 1.5 0.5 0.1 0.1\n"
                                  "-1 0.5 0.5 0.1 0.1 1.2\n"
                                  "2 0.1 0.9 0.2 0.2\r\n");
  CHECK(r.annotations.size() == 2);
  REQUIRE(r.issues.size() == 5);
  CHECK(r.issues[0].line == 2);
  CHECK(r.issues[1].line == 4);
  CHECK(r.issues[4].line == 7);
}

TEST_CASE("emit label file formatting") {
  const std::vector<Annotation> one{{{0.25, 0.75, 0.1, 0.2}, 2, std::nullopt, LabelSource::Manual}};
  CHECK(emit_label_file(one) == "2 0.250000 0.750000 0.100000 0.200000\n");
  CHECK(emit_label_file({}).empty());
  const std::vector<Annotation> px{{{5, 5, 2, 2, CoordSpace::Pixel}, 0, std::nullopt, LabelSource::Manual}};
  CHECK_THROWS_AS(emit_label_file(px), Error);
}

TEST_CASE("label round-trip property") {
  support::Gen g(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Annotation> anns;
    const int n = g.integer(0, 12);
    for (int i = 0; i < n; ++i) {
      Annotation a;
      a.box = support::random_box(g, 0.001, 0.9);
      if (g.coin()) {
        a.source = LabelSource::Auto;
        a.class_id = g.coin() ? kUnknownClass : g.integer(0, 9);
        a.confidence = g.uniform();
      } else {
        a.class_id = g.integer(0, 9);
      }
      anns.push_back(a);
    }
    const auto back = parse_label_file(emit_label_file(anns));
    REQUIRE(back.issues.empty());
    REQUIRE(back.annotations.size() == anns.size());
    for (std::size_t i = 0; i < anns.size(); ++i) {
      const auto &x = anns[i];
      const auto &y = back.annotations[i];
      CHECK(y.class_id == x.class_id);
      CHECK(y.source == x.source);
      CHECK(std::abs(y.box.cx - x.box.cx) <= 1e-6);
      CHECK(std::abs(y.box.cy - x.box.cy) <= 1e-6);
      CHECK(std::abs(y.box.w - x.box.w) <= 1e-6);
      CHECK(std::abs(y.box.h - x.box.h) <= 1e-6);
      CHECK(y.confidence.has_value() == x.confidence.has_value());
      if (x.confidence)
        CHECK(std::abs(*y.confidence - *x.confidence) <= 1e-6);
    }
  }
}

TEST_CASE("label file helpers") {
  const auto dir = support::temp_dir("labels");
  const std::vector<Annotation> anns{
      {{0.5, 0.5, 0.2, 0.2}, 1, std::nullopt, LabelSource::Manual}};
  write_label_file((dir / "a.txt").string(), anns);
  CHECK(read_label_file((dir / "a.txt").string()) == anns);
  support::spit(dir / "bad.txt", "0 0.5 0.5 0.1\n");
  CHECK_THROWS_AS(read_label_file((dir / "bad.txt").string()), Error);
  try {
    read_label_file((dir / "nope.txt").string());
    FAIL("expected an exception");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Io);
    CHECK(std::string(e.what()).find("nope.txt") != std::string::npos);
  }
}

TEST_CASE("similarity transform invariants") {
  Mat2 reflect;
  reflect << 1, 0, 0, -1;
  CHECK_THROWS_AS(SimilarityTransform(1.0, reflect, Vec2::Zero()), Error);
  Mat2 skew;
  skew << 1, 0.1, 0, 1;
  CHECK_THROWS_AS(SimilarityTransform(1.0, skew, Vec2::Zero()), Error);
  CHECK_THROWS_AS(SimilarityTransform(0.0, Mat2::Identity(), Vec2::Zero()), Error);

  support::Gen g(8);
  for (int i = 0; i < 200; ++i) {
    const auto t = SimilarityTransform::from_angle(
        g.uniform(0.1, 10), g.uniform(-std::numbers::pi, std::numbers::pi),
        Vec2(g.uniform(-100, 100), g.uniform(-100, 100)));
    const Mat2 &r = t.rotation();
    CHECK((r.transpose() * r - Mat2::Identity()).norm() < 1e-12);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
    const Vec2 p(g.uniform(-50, 50), g.uniform(-50, 50));
    CHECK((t.inverse().apply(t.apply(p)) - p).norm() < 1e-9);
  }
}

TEST_CASE("counter rng is a pure function of its coordinates") {
  const CounterRng a(42, 3), b(42, 3), c(42, 4);
  for (std::uint64_t i = 0; i < 100; ++i) {
    CHECK(a.bits(i) == b.bits(i));
    CHECK(a.uniform(i) >= 0.0);
    CHECK(a.uniform(i) < 1.0);
    CHECK(a.below(i, 7) < 7);
  }
  int same = 0;
  for (std::uint64_t i = 0; i < 100; ++i)
    same += a.bits(i) == c.bits(i);
  CHECK(same == 0);
}
