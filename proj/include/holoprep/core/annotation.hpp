#pragma once

#include "holoprep/core/bbox.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holoprep::core {

// Auto labels are class-agnostic until the image-level species is applied.
inline constexpr int kUnknownClass = -1;

enum class LabelSource { Manual, Auto };

struct Annotation {
  BBox box;
  int class_id = kUnknownClass;
  std::optional<double> confidence;
  LabelSource source = LabelSource::Manual;

  bool operator==(const Annotation &) const = default;
};

// Throws on a manual label without a class, a manual label carrying a
// confidence, or a confidence outside [0,1].
void validate(const Annotation &a);

struct LabelIssue {
  std::size_t line = 0; // 1-based
  std::string message;
};

struct LabelParseResult {
  std::vector<Annotation> annotations;
  std::vector<LabelIssue> issues;
};

// Parses `class cx cy w h [conf]` lines. Bad lines are skipped and reported.
//
// The on-disk format has no source column, so the source is recovered from
// the fields: class -1 or a confidence column means AUTO, otherwise MANUAL.
LabelParseResult parse_label_file(std::string_view text,
                                  CoordSpace space = CoordSpace::Normalized);

// One line per annotation, 6 decimals. Throws if any box is not normalized.
std::string emit_label_file(std::span<const Annotation> annotations);

// File helpers. `read_label_file` throws on I/O failure and on any bad line.
std::vector<Annotation> read_label_file(const std::string &path);
void write_label_file(const std::string &path,
                      std::span<const Annotation> annotations);

} // namespace holoprep::core
