#include "holoprep/registration/warp.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace holoprep::registration {

using core::Raster;

namespace {

// Inverse map u = a*x + b*y + c, v = d*x + e*y + f evaluated at pixel centers.
struct InverseMap {
  double a, b, c, d, e, f;
};

void warp_rows(const Raster &src, Raster &out, const InverseMap &m,
               Interpolation interp, int row_begin, int row_end) {
  const int sw = src.width();
  const int sh = src.height();
  const int ch = src.channels();
  const int ow = out.width();
  for (int y = row_begin; y < row_end; ++y) {
    const double yc = y + 0.5;
    double u = m.a * 0.5 + m.b * yc + m.c;
    double v = m.d * 0.5 + m.e * yc + m.f;
    std::uint8_t *dst = out.row(y).data();
    for (int x = 0; x < ow; ++x, u += m.a, v += m.d, dst += ch) {
      if (!(u >= 0.0 && v >= 0.0 && u < sw && v < sh))
        continue; // stays 0
      if (interp == Interpolation::Nearest) {
        const int sx = std::min(static_cast<int>(u), sw - 1);
        const int sy = std::min(static_cast<int>(v), sh - 1);
        const std::uint8_t *p = src.row(sy).data() + static_cast<std::size_t>(sx) * ch;
        for (int c = 0; c < ch; ++c)
          dst[c] = p[c];
      } else {
        for (int c = 0; c < ch; ++c)
          dst[c] = core::clamp_to_u8(core::sample_bilinear(src, u, v, c));
      }
    }
  }
}

} // namespace

Raster warp_image(const Raster &src, const core::SimilarityTransform &t,
                  int out_width, int out_height, const WarpOptions &options) {
  if (src.empty())
    throw input_error("cannot warp an empty raster");
  if (out_width < 1 || out_height < 1)
    throw input_error("warp output dimensions must be >= 1");
  const auto pixels =
      static_cast<std::size_t>(out_width) * static_cast<std::size_t>(out_height);
  if (pixels > options.max_pixels)
    throw config_error(fmt::format(
        "warp output {}x{} ({} pixels) exceeds the budget of {} pixels",
        out_width, out_height, pixels, options.max_pixels));

  const core::SimilarityTransform inv = t.inverse();
  const core::Mat2 a = inv.scale() * inv.rotation();
  const InverseMap m{a(0, 0), a(0, 1), inv.translation().x(),
                     a(1, 0), a(1, 1), inv.translation().y()};

  Raster out(out_width, out_height, src.channels(), 0);

  unsigned jobs = options.jobs ? options.jobs : std::thread::hardware_concurrency();
  jobs = std::clamp(jobs, 1u, static_cast<unsigned>(out_height));
  if (jobs == 1) {
    warp_rows(src, out, m, options.interpolation, 0, out_height);
    return out;
  }
  {
    // Each worker owns a disjoint band of rows; joined at scope exit.
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      const int begin =
          static_cast<int>(static_cast<long long>(out_height) * j / jobs);
      const int end =
          static_cast<int>(static_cast<long long>(out_height) * (j + 1) / jobs);
      workers.emplace_back([&, begin, end] {
        warp_rows(src, out, m, options.interpolation, begin, end);
      });
    }
  }
  return out;
}

} // namespace holoprep::registration
