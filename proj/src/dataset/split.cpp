#include "holoprep/dataset/split.hpp"

#include "holoprep/core/error.hpp"
#include "holoprep/core/random.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

namespace holoprep::dataset {

namespace {

constexpr std::uint64_t kShuffleStream = 0x53504c4954ULL; // "SPLIT"
constexpr double kTieEpsilon = 1e-9;

} // namespace

SplitAssignment split_dataset(std::span<const SplitItem> items,
                              const SplitRatios &ratios, std::uint64_t seed) {
  if (items.empty())
    throw input_error("split_dataset: no items");
  const auto r = ratios.as_array();
  for (double x : r)
    if (!(x >= 0.0) || !std::isfinite(x))
      throw config_error("split ratios must be non-negative");
  if (std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9)
    throw config_error(fmt::format("split ratios must sum to 1, got {}+{}+{}",
                                   r[0], r[1], r[2]));

  std::size_t k = 0;
  std::set<std::string> ids;
  for (const auto &it : items) {
    if (!ids.insert(it.id).second)
      throw input_error("duplicate split item id '" + it.id + "'");
    k = std::max(k, it.histogram.size());
  }

  std::vector<std::size_t> class_total(k, 0), class_items(k, 0);
  for (const auto &it : items)
    for (std::size_t c = 0; c < it.histogram.size(); ++c) {
      class_total[c] += it.histogram[c];
      class_items[c] += it.histogram[c] > 0;
    }

  SplitAssignment out;
  for (std::size_t c = 0; c < k; ++c)
    if (class_total[c] > 0 && class_items[c] < 3)
      out.warnings.push_back(fmt::format(
          "class {} appears in only {} item(s); cannot cover all splits", c,
          class_items[c]));

  // Seeded Fisher-Yates.
  std::vector<std::size_t> order(items.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const core::CounterRng rng(seed, kShuffleStream);
  for (std::size_t i = order.size(); i-- > 1;)
    std::swap(order[i], order[rng.below(i, i + 1)]);

  for (auto &v : out.instance_counts)
    v.assign(k, 0);
  const double n_items = static_cast<double>(items.size());

  for (std::size_t idx : order) {
    const SplitItem &it = items[idx];
    int best = 0;
    double best_deficit = -INFINITY;
    double best_item_deficit = -INFINITY;
    for (int s = 0; s < 3; ++s) {
      if (r[s] == 0.0)
        continue;
      double deficit = 0.0;
      for (std::size_t c = 0; c < it.histogram.size(); ++c)
        deficit += static_cast<double>(it.histogram[c]) *
                   (r[s] * static_cast<double>(class_total[c]) -
                    static_cast<double>(out.instance_counts[s][c]));
      const double item_deficit =
          r[s] * n_items - static_cast<double>(out.item_counts[s]);
      const bool better =
          deficit > best_deficit + kTieEpsilon ||
          (std::abs(deficit - best_deficit) <= kTieEpsilon &&
           item_deficit > best_item_deficit + kTieEpsilon);
      if (better) {
        best = s;
        best_deficit = deficit;
        best_item_deficit = item_deficit;
      }
    }
    out.assignment.emplace(it.id, static_cast<core::Split>(best));
    ++out.item_counts[best];
    for (std::size_t c = 0; c < it.histogram.size(); ++c)
      out.instance_counts[best][c] += it.histogram[c];
  }
  return out;
}

std::string emit_split_file(const SplitAssignment &a) {
  std::string out;
  for (const auto &[id, s] : a.assignment)
    out += fmt::format("{} {}\n", id, core::to_string(s));
  return out;
}

std::map<std::string, core::Split> parse_split_file(const std::string &text) {
  std::map<std::string, core::Split> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string id, split, extra;
    if (!(fields >> id))
      continue;
    if (!(fields >> split) || (fields >> extra))
      throw input_error(fmt::format("split file line {}: expected '<id> <SPLIT>'",
                                    line_no));
    if (!out.emplace(id, core::parse_split(split)).second)
      throw input_error(fmt::format("split file line {}: duplicate id '{}'",
                                    line_no, id));
  }
  return out;
}

} // namespace holoprep::dataset
