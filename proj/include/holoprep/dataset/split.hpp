#pragma once

#include "holoprep/core/manifest.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace holoprep::dataset {

// A splittable unit (tile for detection, crop for classification) with its
// per-class instance histogram.
struct SplitItem {
  std::string id;
  std::vector<std::size_t> histogram;
};

struct SplitRatios {
  double train = 0.70;
  double val = 0.15;
  double test = 0.15;

  std::array<double, 3> as_array() const noexcept { return {train, val, test}; }

  bool operator==(const SplitRatios &) const = default;
};

struct SplitAssignment {
  std::map<std::string, core::Split> assignment;
  std::array<std::size_t, 3> item_counts{};
  // Per-class instance totals that landed in each split, [split][class].
  std::array<std::vector<std::size_t>, 3> instance_counts;
  std::vector<std::string> warnings;
};

// Greedy stratified split: items are shuffled by `seed`, then each goes to the
// split with the largest histogram-weighted instance deficit (target minus
// current). Ties fall back to the item-count deficit, then to split order.
SplitAssignment split_dataset(std::span<const SplitItem> items,
                              const SplitRatios &ratios, std::uint64_t seed);

// `<id> <SPLIT>` per line, sorted by id.
std::string emit_split_file(const SplitAssignment &a);
std::map<std::string, core::Split> parse_split_file(const std::string &text);

} // namespace holoprep::dataset
