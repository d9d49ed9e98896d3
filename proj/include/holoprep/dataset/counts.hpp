#pragma once

#include "holoprep/core/manifest.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace holoprep::dataset {

// Instance counts by class x label source x split. Records missing from the
// manifest's split map land in the "unassigned" bucket.
class InstanceCounts {
public:
  static constexpr std::size_t kUnassigned = 3;

  explicit InstanceCounts(std::vector<std::string> class_names);

  const std::vector<std::string> &class_names() const noexcept { return names_; }
  std::size_t num_classes() const noexcept { return names_.size(); }

  void add(int class_id, core::LabelSource source,
           std::optional<core::Split> split, std::size_t n = 1);

  std::size_t at(int class_id, core::LabelSource source,
                 std::optional<core::Split> split) const;
  std::size_t class_total(int class_id, core::LabelSource source) const;
  std::size_t split_total(core::LabelSource source,
                          std::optional<core::Split> split) const;
  std::size_t source_total(core::LabelSource source) const;
  std::size_t grand_total() const;

  // Per-class totals over every source and split.
  std::vector<std::size_t> per_class() const;

private:
  using Buckets = std::array<std::size_t, 4>;
  std::vector<std::string> names_;
  std::vector<std::array<Buckets, 2>> cells_;
};

// Counts every annotation of every record; split membership is looked up by
// record image_path. Throws on an annotation without a class.
InstanceCounts count_instances(const core::DatasetManifest &manifest);

struct ClassWeightTable {
  std::vector<double> weights;
};

// weight_c = N / (K * n_c), so weight_c * n_c = N / K for every class.
// Throws when a class has zero instances.
ClassWeightTable class_weights(std::span<const std::size_t> counts);

} // namespace holoprep::dataset
