#include "support.hpp"

#include "holoprep/core/error.hpp"
#include "holoprep/dataset/crops.hpp"
#include "holoprep/dataset/screening.hpp"
#include "holoprep/dataset/tiling.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace holoprep;
using namespace holoprep::dataset;
using core::Annotation;
using core::BBox;
using core::CoordSpace;
using core::LabelSource;
using core::Raster;

namespace {

Annotation pixel_annotation(double x0, double y0, double x1, double y1, int w, int h,
                            int cls = 0) {
  return {core::to_normalized(BBox::from_corners(x0, y0, x1, y1, CoordSpace::Pixel),
                              {double(w), double(h)}),
          cls, std::nullopt, LabelSource::Manual};
}

Raster with_black_pixels(int w, int h, int black) {
  Raster r(w, h, 3, 90);
  for (int i = 0; i < black; ++i)
    for (int c = 0; c < 3; ++c)
      r.at(i % w, i / w, c) = 0;
  return r;
}

} // namespace

TEST_CASE("grid over a full-size slide") {
  const auto grid = tile_grid(17500, 8000, 640);
  CHECK(grid.size() == 364);
  CHECK(grid.back().row == 12);
  CHECK(grid.back().col == 27);
  CHECK(grid.back().width == 17500 - 27 * 640);
  CHECK(grid.back().height == 8000 - 12 * 640);
}

TEST_CASE("a tile-sized image gives one tile with unchanged annotations") {
  support::Gen g(41);
  const auto r = support::random_raster(g, 640, 640, 3);
  std::vector<Annotation> anns;
  for (int i = 0; i < 5; ++i)
    anns.push_back({support::random_box(g), i % 4, std::nullopt, LabelSource::Manual});
  const auto result = tile_image(r, anns, "slide");
  REQUIRE(result.tiles.size() == 1);
  CHECK(result.tiles[0].raster == r);
  CHECK(result.tiles[0].stem() == "slide_r0_c0");
  REQUIRE(result.tiles[0].annotations.size() == anns.size());
  for (std::size_t i = 0; i < anns.size(); ++i) {
    CHECK(result.tiles[0].annotations[i].box.cx == doctest::Approx(anns[i].box.cx).epsilon(1e-12));
    CHECK(result.tiles[0].annotations[i].box.w == doctest::Approx(anns[i].box.w).epsilon(1e-12));
  }
  CHECK(result.damaged == 0);
}

TEST_CASE("a box split 60/40 between two tiles") {
  const Raster r(1280, 640, 1, 50);
  // x in [580, 680): 60 px left of the seam at 640, 40 px right of it.
  const std::vector<Annotation> anns{pixel_annotation(580, 300, 680, 340, 1280, 640)};

  const auto half = tile_image(r, anns, "s", {640, 0.5});
  REQUIRE(half.tiles.size() == 2);
  REQUIRE(half.tiles[0].annotations.size() == 1);
  CHECK(half.tiles[1].annotations.empty());
  const BBox &left = half.tiles[0].annotations[0].box;
  CHECK(left.cx == doctest::Approx(610.0 / 640.0).epsilon(1e-12));
  CHECK(left.w == doctest::Approx(60.0 / 640.0).epsilon(1e-12));
  CHECK(left.cy == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(left.h == doctest::Approx(40.0 / 640.0).epsilon(1e-12));
  CHECK(half.damaged == 0);

  const auto loose = tile_image(r, anns, "s", {640, 0.3});
  REQUIRE(loose.tiles[0].annotations.size() == 1);
  REQUIRE(loose.tiles[1].annotations.size() == 1);
  const BBox &right = loose.tiles[1].annotations[0].box;
  CHECK(right.cx == doctest::Approx(20.0 / 640.0).epsilon(1e-12));
  CHECK(right.w == doctest::Approx(40.0 / 640.0).epsilon(1e-12));

  const auto strict = tile_image(r, anns, "s", {640, 0.7});
  CHECK(strict.tiles[0].annotations.empty());
  CHECK(strict.tiles[1].annotations.empty());
  CHECK(strict.damaged == 1);
}

TEST_CASE("tiles partition the parent exactly") {
  support::Gen g(42);
  for (int trial = 0; trial < 60; ++trial) {
    const int w = g.integer(1, 300), h = g.integer(1, 300), ts = g.integer(1, 120);
    std::vector<int> cover(static_cast<std::size_t>(w) * h, 0);
    for (const auto &t : tile_grid(w, h, ts)) {
      CHECK(t.x >= 0);
      CHECK(t.y >= 0);
      CHECK(t.x + t.width <= w);
      CHECK(t.y + t.height <= h);
      CHECK(t.width <= ts);
      CHECK(t.height <= ts);
      for (int y = t.y; y < t.y + t.height; ++y)
        for (int x = t.x; x < t.x + t.width; ++x)
          ++cover[static_cast<std::size_t>(y) * w + x];
    }
    CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("tile pixels are copies of the parent region") {
  support::Gen g(43);
  const auto r = support::random_raster(g, 150, 97, 3);
  for (const auto &t : tile_image(r, {}, "p", {64, 0.5}).tiles)
    for (int y = 0; y < t.rect.height; ++y)
      for (int x = 0; x < t.rect.width; ++x)
        CHECK(t.raster.at(x, y, 1) == r.at(t.rect.x + x, t.rect.y + y, 1));
}

TEST_CASE("annotation conservation across tiles") {
  support::Gen g(44);
  for (int trial = 0; trial < 30; ++trial) {
    const int w = g.integer(100, 400), h = g.integer(100, 400);
    const Raster r(w, h, 1, 1);
    std::vector<Annotation> anns;
    for (int i = 0; i < 25; ++i)
      anns.push_back({support::random_box(g, 0.02, 0.3), 0, std::nullopt, LabelSource::Manual});

    // Near-zero keep fraction: everything survives somewhere.
    const auto all = tile_image(r, anns, "p", {64, 1e-9});
    CHECK(all.damaged == 0);

    // Above one half a box can be in at most one tile, so the damaged count
    // is exactly what is missing from the tiles.
    const double keep = g.uniform(0.51, 1.0);
    const auto strict = tile_image(r, anns, "p", {64, keep});
    std::size_t placed = 0;
    for (const auto &t : strict.tiles) {
      placed += t.annotations.size();
      for (const auto &a : t.annotations) {
        CHECK(a.box.x0() >= -1e-12);
        CHECK(a.box.x1() <= 1 + 1e-12);
        CHECK(a.box.y0() >= -1e-12);
        CHECK(a.box.y1() <= 1 + 1e-12);
      }
    }
    CHECK(strict.damaged == anns.size() - placed);
  }
}

TEST_CASE("tiling rejects bad options") {
  const Raster r(100, 100, 1);
  CHECK_THROWS_AS(tile_image(r, {}, "p", {16, 0.5}), Error);
  CHECK_THROWS_AS(tile_image(r, {}, "p", {64, 0.0}), Error);
  CHECK_THROWS_AS(tile_image(r, {}, "p", {64, 1.5}), Error);
}

TEST_CASE("crops: sizes, counts and naming") {
  const Raster r(400, 300, 3, 120);
  const std::vector<Annotation> one{pixel_annotation(150, 100, 250, 200, 400, 300, 2)};
  const auto res = extract_crops(r, one, 112);
  REQUIRE(res.crops.size() == 1);
  CHECK(res.crops[0].raster.width() == 112);
  CHECK(res.crops[0].raster.height() == 112);
  CHECK(res.crops[0].raster.channels() == 3);
  CHECK(res.crops[0].class_id == 2);
  CHECK(extract_crops(r, {}, 112).crops.empty());
  CHECK(crop_stem("slide_r0_c1", 4, "T9") == "slide_r0_c1_a4_T9");
}

TEST_CASE("crops refuse annotations without a class") {
  const Raster r(100, 100, 1, 1);
  const std::vector<Annotation> anns{
      {{0.5, 0.5, 0.2, 0.2}, 0, std::nullopt, LabelSource::Manual},
      {{0.5, 0.5, 0.2, 0.2}, core::kUnknownClass, 0.9, LabelSource::Auto}};
  try {
    extract_crops(r, anns, 32);
    FAIL("expected an exception");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("annotation 1") != std::string::npos);
  }
}

TEST_CASE("crop mean intensity matches the source region") {
  // A smooth random field: the bilinear resample of a 150x75 region to
  // 112x112 should keep its mean within one grey level.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    support::Gen g(500 + seed);
    const double ax = g.uniform(0.005, 0.05), ay = g.uniform(0.005, 0.05);
    const double px = g.uniform(0, 6.28), py = g.uniform(0, 6.28);
    const double gx = g.uniform(-0.3, 0.3), gy = g.uniform(-0.3, 0.3);
    Raster r(400, 300, 1);
    for (int y = 0; y < 300; ++y)
      for (int x = 0; x < 400; ++x)
        r.at(x, y) = core::clamp_to_u8(120 + 50 * std::sin(ax * x + px) * std::cos(ay * y + py) +
                                       gx * (x - 200) + gy * (y - 150));
    const int x0 = g.integer(0, 250), y0 = g.integer(0, 225);
    const std::vector<Annotation> anns{pixel_annotation(x0, y0, x0 + 150, y0 + 75, 400, 300, 1)};
    const auto res = extract_crops(r, anns, 112);
    REQUIRE(res.crops.size() == 1);
    double src_mean = 0;
    for (int y = y0; y < y0 + 75; ++y)
      for (int x = x0; x < x0 + 150; ++x)
        src_mean += r.at(x, y);
    src_mean /= 150.0 * 75.0;
    double crop_mean = 0;
    for (auto v : res.crops[0].raster.data())
      crop_mean += v;
    crop_mean /= 112.0 * 112.0;
    CHECK(std::abs(crop_mean - src_mean) <= 1.0);
  }
}

TEST_CASE("crops at the border are clipped; empty regions are skipped") {
  const Raster r(100, 100, 1, 200);
  std::vector<Annotation> anns{pixel_annotation(80, 80, 120, 120, 100, 100, 0)};
  anns[0].box = {0.99, 0.99, 0.4, 0.4};
  const auto res = extract_crops(r, anns, 16);
  REQUIRE(res.crops.size() == 1);
  for (auto v : res.crops[0].raster.data())
    CHECK(v == 200);
}

TEST_CASE("black fraction examples") {
  CHECK(black_fraction(Raster(7, 5, 3, 0)) == 1.0);
  CHECK(black_fraction(Raster(7, 5, 1, 3)) == 0.0);
  CHECK(black_fraction(with_black_pixels(10, 10, 20)) == doctest::Approx(0.20));
  Raster partial(2, 1, 3, 0);
  partial.at(0, 0, 1) = 1; // one non-zero channel is not black
  CHECK(black_fraction(partial) == 0.5);
}

TEST_CASE("screening boundary: 20% or more is excluded") {
  CHECK_FALSE(is_excluded(black_fraction(with_black_pixels(100, 100, 1999)), 0.20));
  CHECK(is_excluded(black_fraction(with_black_pixels(100, 100, 2000)), 0.20));
  CHECK(is_excluded(black_fraction(with_black_pixels(100, 100, 2001)), 0.20));
  CHECK(is_excluded(1.0, 0.20));
}

TEST_CASE("screen_tiles partitions its input") {
  support::Gen g(45);
  std::vector<Tile> tiles;
  for (int i = 0; i < 40; ++i)
    tiles.push_back({"p", {0, i, 0, 0, 20, 20}, with_black_pixels(20, 20, g.integer(0, 400)), {}});
  const auto result = screen_tiles(tiles);
  CHECK(result.kept.size() + result.excluded.size() == tiles.size());
  std::set<int> seen;
  for (const auto &t : result.kept) {
    CHECK(black_fraction(t.raster) < 0.2);
    CHECK(seen.insert(t.rect.col).second);
  }
  for (const auto &t : result.excluded) {
    CHECK(black_fraction(t.raster) >= 0.2);
    CHECK(seen.insert(t.rect.col).second);
  }
  CHECK(seen.size() == tiles.size());
  CHECK_THROWS_AS(screen_tiles({}, 0.0), Error);
}
