#pragma once

#include "holoprep/core/manifest.hpp"
#include "holoprep/dataset/counts.hpp"
#include "holoprep/eval/metrics.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace holoprep::report {

// Round half away from zero to `decimals` places.
double round_display(double value, int decimals = 2);
std::string format_display(double value, int decimals = 2);

struct FactorReport {
  std::size_t baseline = 0;
  std::size_t expanded = 0;
  double factor = 0.0; // raw expanded / baseline
  double display = 0.0; // factor rounded to 2 decimals
};

// Throws on a zero baseline.
FactorReport expansion_factor(std::size_t baseline, std::size_t expanded);

enum class Direction { Improvement, Degradation, Unchanged };

struct RatioReport {
  double before = 0.0;
  double after = 0.0;
  double ratio = 0.0; // larger / smaller, always >= 1
  double display = 0.0;
  Direction direction = Direction::Unchanged;
};

// Ratio between two metric values; `after / before` for an improvement and
// `before / after` for a degradation. Throws when either value is <= 0.
RatioReport compare_runs(double before, double after);

enum class MetricKind { Map50, Accuracy };

// Compares the chosen metric of two results; throws if either lacks it.
RatioReport compare_runs(const eval::EvalResult &before,
                         const eval::EvalResult &after, MetricKind kind);

std::string_view to_string(Direction d) noexcept;

// Rows per class plus a totals row: Classes | Manual Labels | Automated Labels.
struct InstanceTable {
  struct Row {
    std::string name;
    std::size_t manual = 0;
    std::size_t automated = 0;
  };
  std::vector<Row> rows;
  Row total;
};

InstanceTable table_instances(const dataset::InstanceCounts &counts);
InstanceTable table_instances(const core::DatasetManifest &manifest);

// Rows per label source: Annotation Method | Training | Validation | Testing | Total.
struct SplitTable {
  struct Row {
    std::string method;
    std::size_t train = 0;
    std::size_t val = 0;
    std::size_t test = 0;
    std::size_t total = 0;
  };
  std::vector<Row> rows;
};

// Builds the split table from the manifest's annotations and `assignment`
// (keyed by record image_path). Throws when an instance is left unassigned,
// i.e. the split totals do not reproduce the manifest totals.
SplitTable table_splits(const core::DatasetManifest &manifest,
                        const std::map<std::string, core::Split> &assignment);

std::string to_text(const InstanceTable &t);
std::string to_csv(const InstanceTable &t);
std::string to_text(const SplitTable &t);
std::string to_csv(const SplitTable &t);

} // namespace holoprep::report
