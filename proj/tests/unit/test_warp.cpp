#include "support.hpp"

#include "holoprep/core/error.hpp"
#include "holoprep/dataset/screening.hpp"
#include "holoprep/registration/warp.hpp"

#include <doctest.h>

#include <numbers>

using namespace holoprep;
using namespace holoprep::registration;
using core::Raster;
using core::SimilarityTransform;
using core::Vec2;

TEST_CASE("identity warp with nearest sampling is byte-identical") {
  support::Gen g(31);
  for (int channels : {1, 3}) {
    const auto src = support::random_raster(g, 37, 23, channels);
    const auto out = warp_image(src, SimilarityTransform::identity(), 37, 23,
                                {Interpolation::Nearest});
    CHECK(out == src);
  }
}

TEST_CASE("identity warp with bilinear sampling is byte-identical") {
  support::Gen g(32);
  const auto src = support::random_raster(g, 19, 11, 3);
  CHECK(warp_image(src, SimilarityTransform::identity(), 19, 11) == src);
}

TEST_CASE("nearest 2x upsample of a checkerboard gives 2x2 blocks") {
  const Raster board(2, 2, 1, std::vector<std::uint8_t>{10, 200, 200, 10});
  const auto out = warp_image(board, SimilarityTransform::from_angle(2.0, 0.0, Vec2::Zero()),
                              4, 4, {Interpolation::Nearest});
  // Output pixel centers (x+0.5)/2 fall in source pixel floor(x/2).
  const std::uint8_t expected[4][4] = {
      {10, 10, 200, 200}, {10, 10, 200, 200}, {200, 200, 10, 10}, {200, 200, 10, 10}};
  for (int y = 0; y < 4; ++y)
    for (int x = 0; x < 4; ++x)
      CHECK(out.at(x, y) == expected[y][x]);
}

TEST_CASE("pixels mapping outside the source are exactly black") {
  const Raster src(10, 10, 3, 255);
  const auto t = SimilarityTransform::from_angle(1.0, 0.0, Vec2(5, 0));
  const auto out = warp_image(src, t, 20, 10, {Interpolation::Nearest});
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 20; ++x)
      for (int c = 0; c < 3; ++c)
        CHECK(out.at(x, y, c) == ((x >= 5 && x < 15) ? 255 : 0));
  CHECK(dataset::black_fraction(out) == doctest::Approx(0.5));
}

TEST_CASE("partial coverage of a larger frame leaves black borders") {
  const Raster src(384, 216, 1, 128);
  const double scale = 4.557;
  const auto t = SimilarityTransform::from_angle(scale, 0.03, Vec2(40, -300));
  const auto out = warp_image(src, t, 1750, 800);
  CHECK(out.at(0, 799) == 0);
  CHECK(out.at(1749, 799) == 0);
  CHECK(out.at(875, 400) == 128);
  const double frac = dataset::black_fraction(out);
  CHECK(frac > 0.0);
  CHECK(frac < 1.0);
}

TEST_CASE("worker count does not change the output") {
  support::Gen g(33);
  const auto src = support::random_raster(g, 64, 48, 3);
  const auto t = SimilarityTransform::from_angle(2.7, 0.4, Vec2(20, -15));
  WarpOptions one{Interpolation::Bilinear, 400'000'000, 1};
  WarpOptions many{Interpolation::Bilinear, 400'000'000, 5};
  CHECK(warp_image(src, t, 170, 131, one) == warp_image(src, t, 170, 131, many));
}

TEST_CASE("the pixel budget refuses oversized outputs") {
  const Raster src(4, 4, 1, 1);
  WarpOptions opts;
  opts.max_pixels = 100;
  try {
    warp_image(src, SimilarityTransform::identity(), 11, 10, opts);
    FAIL("expected refusal");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::Config);
  }
  CHECK_NOTHROW(warp_image(src, SimilarityTransform::identity(), 10, 10, opts));
}

TEST_CASE("bilinear warp of a constant image is constant where covered") {
  const Raster src(50, 40, 1, 77);
  const auto t = SimilarityTransform::from_angle(1.7, std::numbers::pi / 7, Vec2(30, 5));
  const auto out = warp_image(src, t, 120, 120);
  for (auto v : out.data())
    CHECK((v == 0 || v == 77));
}
