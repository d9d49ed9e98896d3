#include "holoprep/dataset/counts.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

namespace holoprep::dataset {

using core::LabelSource;

namespace {

std::size_t source_index(LabelSource s) noexcept {
  return s == LabelSource::Manual ? 0 : 1;
}

std::size_t bucket_index(std::optional<core::Split> s) noexcept {
  return s ? static_cast<std::size_t>(*s) : InstanceCounts::kUnassigned;
}

} // namespace

InstanceCounts::InstanceCounts(std::vector<std::string> class_names)
    : names_(std::move(class_names)), cells_(names_.size()) {
  for (auto &c : cells_)
    for (auto &b : c)
      b.fill(0);
}

void InstanceCounts::add(int class_id, LabelSource source,
                         std::optional<core::Split> split, std::size_t n) {
  if (class_id < 0 || static_cast<std::size_t>(class_id) >= names_.size())
    throw input_error(fmt::format("class id {} out of range", class_id));
  cells_[class_id][source_index(source)][bucket_index(split)] += n;
}

std::size_t InstanceCounts::at(int class_id, LabelSource source,
                               std::optional<core::Split> split) const {
  return cells_.at(class_id)[source_index(source)][bucket_index(split)];
}

std::size_t InstanceCounts::class_total(int class_id, LabelSource source) const {
  std::size_t n = 0;
  for (std::size_t b : cells_.at(class_id)[source_index(source)])
    n += b;
  return n;
}

std::size_t InstanceCounts::split_total(LabelSource source,
                                        std::optional<core::Split> split) const {
  std::size_t n = 0;
  for (const auto &c : cells_)
    n += c[source_index(source)][bucket_index(split)];
  return n;
}

std::size_t InstanceCounts::source_total(LabelSource source) const {
  std::size_t n = 0;
  for (std::size_t c = 0; c < cells_.size(); ++c)
    n += class_total(static_cast<int>(c), source);
  return n;
}

std::size_t InstanceCounts::grand_total() const {
  return source_total(LabelSource::Manual) + source_total(LabelSource::Auto);
}

std::vector<std::size_t> InstanceCounts::per_class() const {
  std::vector<std::size_t> out(cells_.size(), 0);
  for (std::size_t c = 0; c < cells_.size(); ++c)
    out[c] = class_total(static_cast<int>(c), LabelSource::Manual) +
             class_total(static_cast<int>(c), LabelSource::Auto);
  return out;
}

InstanceCounts count_instances(const core::DatasetManifest &manifest) {
  InstanceCounts counts(manifest.class_names);
  for (const auto &r : manifest.records) {
    std::optional<core::Split> split;
    if (auto it = manifest.splits.find(r.image_path); it != manifest.splits.end())
      split = it->second;
    for (std::size_t i = 0; i < r.annotations.size(); ++i) {
      const auto &a = r.annotations[i];
      if (a.class_id == core::kUnknownClass)
        throw input_error(fmt::format(
            "record '{}' annotation {} has no class; assign classes first",
            r.image_path, i));
      counts.add(a.class_id, a.source, split);
    }
  }
  return counts;
}

ClassWeightTable class_weights(std::span<const std::size_t> counts) {
  if (counts.empty())
    throw input_error("class_weights: no classes");
  double total = 0.0;
  for (std::size_t c = 0; c < counts.size(); ++c) {
    if (counts[c] == 0)
      throw input_error(
          fmt::format("class {} has no instances; cannot weight it", c));
    total += static_cast<double>(counts[c]);
  }
  const double k = static_cast<double>(counts.size());
  ClassWeightTable table;
  table.weights.reserve(counts.size());
  for (std::size_t n : counts)
    table.weights.push_back(total / (k * static_cast<double>(n)));
  return table;
}

} // namespace holoprep::dataset
