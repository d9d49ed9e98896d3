#pragma once

// Shared helpers for the test binaries. The generator is deliberately not the
// library's CounterRng so that property tests do not share code with the
// code under test.

#include "holoprep/core/annotation.hpp"
#include "holoprep/core/bbox.hpp"
#include "holoprep/core/raster.hpp"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <unistd.h>

namespace support {

// xorshift64* seeded through one SplitMix64 step.
class Gen {
public:
  explicit Gen(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    state_ = (z ^ (z >> 31)) | 1;
  }
  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545f4914f6cdd1dULL;
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Inclusive on both ends.
  int integer(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(double p = 0.5) { return uniform() < p; }

private:
  std::uint64_t state_;
};

// A normalized box that stays inside the unit square.
inline holoprep::core::BBox random_box(Gen &g, double min_side = 0.01,
                                       double max_side = 0.4) {
  const double w = g.uniform(min_side, max_side);
  const double h = g.uniform(min_side, max_side);
  return {g.uniform(w / 2, 1 - w / 2), g.uniform(h / 2, 1 - h / 2), w, h,
          holoprep::core::CoordSpace::Normalized};
}

inline holoprep::core::Raster random_raster(Gen &g, int w, int h, int channels) {
  holoprep::core::Raster r(w, h, channels);
  for (auto &v : r.data())
    v = static_cast<std::uint8_t>(g.next() >> 56);
  return r;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path temp_dir(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / "holoprep_tests" /
                   (name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path &p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path &p, const std::string &text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

} // namespace support
