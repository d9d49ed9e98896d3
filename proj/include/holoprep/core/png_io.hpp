#pragma once

#include "holoprep/core/raster.hpp"

#include <filesystem>

namespace holoprep::core {

// 8-bit grey or RGB. Palette images expand to RGB, alpha is dropped and
// 16-bit samples are reduced to 8 bits.
Raster read_png(const std::filesystem::path &path);

// Deterministic output: no timestamp or text chunks, fixed compression.
void write_png(const Raster &raster, const std::filesystem::path &path);

} // namespace holoprep::core
