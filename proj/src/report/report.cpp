#include "holoprep/report/report.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <cmath>

namespace holoprep::report {

using core::LabelSource;

double round_display(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  // Decimal ties such as 1.005 are stored just below the tie; a tiny relative
  // nudge makes them round away from zero as written.
  const double scaled = value * scale;
  const double nudged = scaled + std::copysign(1e-9 * std::max(1.0, std::abs(scaled)), scaled);
  return std::round(nudged) / scale;
}

std::string format_display(double value, int decimals) {
  return fmt::format("{:.{}f}", round_display(value, decimals), decimals);
}

FactorReport expansion_factor(std::size_t baseline, std::size_t expanded) {
  if (baseline == 0)
    throw input_error("expansion factor needs a non-zero baseline");
  const double f = static_cast<double>(expanded) / static_cast<double>(baseline);
  return {baseline, expanded, f, round_display(f)};
}

RatioReport compare_runs(double before, double after) {
  if (!(before > 0.0) || !(after > 0.0))
    throw input_error("compare_runs needs positive metric values");
  RatioReport r;
  r.before = before;
  r.after = after;
  if (after > before) {
    r.ratio = after / before;
    r.direction = Direction::Improvement;
  } else if (after < before) {
    r.ratio = before / after;
    r.direction = Direction::Degradation;
  } else {
    r.ratio = 1.0;
  }
  r.display = round_display(r.ratio);
  return r;
}

RatioReport compare_runs(const eval::EvalResult &before,
                         const eval::EvalResult &after, MetricKind kind) {
  const auto pick = [kind](const eval::EvalResult &r) {
    const auto &v = kind == MetricKind::Map50 ? r.map50 : r.accuracy;
    if (!v)
      throw input_error(kind == MetricKind::Map50
                            ? "evaluation result has no mAP50"
                            : "evaluation result has no accuracy");
    return *v;
  };
  return compare_runs(pick(before), pick(after));
}

std::string_view to_string(Direction d) noexcept {
  switch (d) {
  case Direction::Improvement:
    return "improvement";
  case Direction::Degradation:
    return "degradation";
  case Direction::Unchanged:
    return "unchanged";
  }
  return "unchanged";
}

InstanceTable table_instances(const dataset::InstanceCounts &counts) {
  InstanceTable t;
  t.total.name = "Total";
  for (std::size_t c = 0; c < counts.num_classes(); ++c) {
    const int id = static_cast<int>(c);
    InstanceTable::Row row{counts.class_names()[c],
                           counts.class_total(id, LabelSource::Manual),
                           counts.class_total(id, LabelSource::Auto)};
    t.total.manual += row.manual;
    t.total.automated += row.automated;
    t.rows.push_back(std::move(row));
  }
  return t;
}

InstanceTable table_instances(const core::DatasetManifest &manifest) {
  return table_instances(dataset::count_instances(manifest));
}

SplitTable table_splits(const core::DatasetManifest &manifest,
                        const std::map<std::string, core::Split> &assignment) {
  core::DatasetManifest assigned = manifest;
  assigned.splits = assignment;
  const dataset::InstanceCounts counts = dataset::count_instances(assigned);

  SplitTable t;
  for (LabelSource src : {LabelSource::Manual, LabelSource::Auto}) {
    SplitTable::Row row;
    row.method = src == LabelSource::Manual ? "Manual Labels" : "Automated Labels";
    row.train = counts.split_total(src, core::Split::Train);
    row.val = counts.split_total(src, core::Split::Val);
    row.test = counts.split_total(src, core::Split::Test);
    row.total = row.train + row.val + row.test;
    if (row.total != counts.source_total(src))
      throw input_error(fmt::format(
          "{}: split totals {} do not match manifest total {} ({} unassigned)",
          row.method, row.total, counts.source_total(src),
          counts.split_total(src, std::nullopt)));
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string to_text(const InstanceTable &t) {
  std::string out = fmt::format("{:<10} {:>14} {:>17}\n", "Classes",
                                "Manual Labels", "Automated Labels");
  for (const auto &r : t.rows)
    out += fmt::format("{:<10} {:>14} {:>17}\n", r.name, r.manual, r.automated);
  out += fmt::format("{:<10} {:>14} {:>17}\n", t.total.name, t.total.manual,
                     t.total.automated);
  return out;
}

std::string to_csv(const InstanceTable &t) {
  std::string out = "Classes,Manual Labels,Automated Labels\n";
  for (const auto &r : t.rows)
    out += fmt::format("{},{},{}\n", r.name, r.manual, r.automated);
  out += fmt::format("{},{},{}\n", t.total.name, t.total.manual, t.total.automated);
  return out;
}

std::string to_text(const SplitTable &t) {
  std::string out = fmt::format("{:<18} {:>9} {:>11} {:>8} {:>8}\n",
                                "Annotation Method", "Training", "Validation",
                                "Testing", "Total");
  for (const auto &r : t.rows)
    out += fmt::format("{:<18} {:>9} {:>11} {:>8} {:>8}\n", r.method, r.train,
                       r.val, r.test, r.total);
  return out;
}

std::string to_csv(const SplitTable &t) {
  std::string out = "Annotation Method,Training,Validation,Testing,Total\n";
  for (const auto &r : t.rows)
    out += fmt::format("{},{},{},{},{}\n", r.method, r.train, r.val, r.test, r.total);
  return out;
}

} // namespace holoprep::report
