#pragma once

#include "holoprep/core/annotation.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace holoprep::core {

enum class Modality { Optical, Holographic };
enum class Split { Train, Val, Test };

std::string_view to_string(Modality m) noexcept;
std::string_view to_string(Split s) noexcept;
Modality parse_modality(std::string_view s);
Split parse_split(std::string_view s);

struct ImageRecord {
  std::string image_path;
  Modality modality = Modality::Optical;
  // Index into DatasetManifest::class_names; each slide holds one species.
  std::optional<int> species_tag;
  // Sibling label file; relative paths resolve against the manifest directory.
  std::string label_path;
  std::vector<Annotation> annotations;
  // True once the raster has been warped into the optical frame.
  bool aligned = false;

  bool operator==(const ImageRecord &) const = default;
};

struct DatasetManifest {
  std::vector<ImageRecord> records;
  std::vector<std::string> class_names;
  // Keyed by item identifier (record image_path, tile stem, crop stem, ...).
  std::map<std::string, Split> splits;

  std::optional<int> class_index(std::string_view name) const;

  bool operator==(const DatasetManifest &) const = default;
};

// Throws on empty/duplicate class names, duplicate record paths, species
// indices out of range or annotations violating their invariants.
void validate(const DatasetManifest &m);

// Reads the JSON manifest and, for records with a label_path, the label file.
DatasetManifest load_manifest(const std::filesystem::path &path);

// Writes the JSON manifest plus a label file for every record with a
// label_path (an empty file when the record has no annotations).
void save_manifest(const DatasetManifest &m, const std::filesystem::path &path);

} // namespace holoprep::core
