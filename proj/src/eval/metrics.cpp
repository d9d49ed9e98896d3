#include "holoprep/eval/metrics.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>

namespace holoprep::eval {

MatchResult match_detections(std::span<const Detection> dets,
                             std::span<const GroundTruth> gts, double iou_thr) {
  MatchResult m;
  m.order.resize(dets.size());
  std::iota(m.order.begin(), m.order.end(), std::size_t{0});
  std::stable_sort(m.order.begin(), m.order.end(), [&](std::size_t a, std::size_t b) {
    return dets[a].confidence > dets[b].confidence;
  });
  m.true_positive.assign(dets.size(), false);
  m.matched_gt.assign(dets.size(), std::nullopt);

  std::vector<bool> taken(gts.size(), false);
  for (std::size_t di : m.order) {
    const Detection &d = dets[di];
    std::optional<std::size_t> best;
    double best_iou = iou_thr;
    for (std::size_t gi = 0; gi < gts.size(); ++gi) {
      const GroundTruth &g = gts[gi];
      if (taken[gi] || g.class_id != d.class_id || g.image_id != d.image_id)
        continue;
      const double v = iou(d.box, g.box);
      if (v >= best_iou && (!best || v > best_iou)) {
        best = gi;
        best_iou = v;
      }
    }
    if (best) {
      taken[*best] = true;
      m.true_positive[di] = true;
      m.matched_gt[di] = best;
    }
  }
  return m;
}

namespace {

std::vector<PrPoint> pr_curve(const std::vector<bool> &tp, std::size_t n_gt) {
  std::vector<PrPoint> curve;
  curve.reserve(tp.size());
  std::size_t tps = 0;
  for (std::size_t i = 0; i < tp.size(); ++i) {
    tps += tp[i];
    curve.push_back({static_cast<double>(tps) / static_cast<double>(n_gt),
                     static_cast<double>(tps) / static_cast<double>(i + 1)});
  }
  return curve;
}

} // namespace

double average_precision(const std::vector<bool> &tp_sequence,
                         std::size_t n_ground_truth, Interpolation interp) {
  if (n_ground_truth == 0 || tp_sequence.empty())
    return 0.0;
  std::vector<PrPoint> curve = pr_curve(tp_sequence, n_ground_truth);

  if (interp == Interpolation::ElevenPoint) {
    double sum = 0.0;
    for (int k = 0; k <= 10; ++k) {
      const double r = k / 10.0;
      double p = 0.0;
      for (const auto &pt : curve)
        if (pt.recall >= r - 1e-12)
          p = std::max(p, pt.precision);
      sum += p;
    }
    return sum / 11.0;
  }

  // Precision envelope: running maximum from the right.
  for (std::size_t i = curve.size() - 1; i-- > 0;)
    curve[i].precision = std::max(curve[i].precision, curve[i + 1].precision);
  double ap = 0.0;
  double prev_recall = 0.0;
  for (const auto &pt : curve) {
    if (pt.recall > prev_recall) {
      ap += (pt.recall - prev_recall) * pt.precision;
      prev_recall = pt.recall;
    }
  }
  return std::clamp(ap, 0.0, 1.0);
}

EvalResult map50(std::span<const Detection> dets, std::span<const GroundTruth> gts,
                 std::span<const std::string> class_names,
                 const MapOptions &options) {
  const int k = static_cast<int>(class_names.size());
  if (gts.empty())
    throw input_error("map50: no ground truth across all classes");
  for (const auto &g : gts)
    if (g.class_id < 0 || g.class_id >= k)
      throw input_error(fmt::format("ground truth class {} outside vocabulary", g.class_id));
  for (const auto &d : dets) {
    if (d.class_id < 0 || d.class_id >= k)
      throw input_error(fmt::format("detection class {} outside vocabulary", d.class_id));
    if (!(d.confidence >= 0.0 && d.confidence <= 1.0))
      throw input_error("detection confidence outside [0,1]");
  }

  const MatchResult m = match_detections(dets, gts, options.iou_threshold);
  EvalResult result;
  double sum = 0.0;
  int counted = 0;
  for (int c = 0; c < k; ++c) {
    ClassStats s;
    s.name = class_names[c];
    s.n_ground_truth = static_cast<std::size_t>(std::count_if(
        gts.begin(), gts.end(), [c](const GroundTruth &g) { return g.class_id == c; }));
    std::vector<bool> seq;
    for (std::size_t di : m.order)
      if (dets[di].class_id == c)
        seq.push_back(m.true_positive[di]);
    s.true_positives = static_cast<std::size_t>(std::count(seq.begin(), seq.end(), true));
    s.false_positives = seq.size() - s.true_positives;
    if (s.n_ground_truth > 0) {
      s.ap = average_precision(seq, s.n_ground_truth, options.interpolation);
      s.curve = pr_curve(seq, s.n_ground_truth);
      sum += *s.ap;
      ++counted;
    }
    result.per_class.push_back(std::move(s));
  }
  result.map50 = sum / counted;
  return result;
}

EvalResult classification_metrics(std::span<const int> pred,
                                  std::span<const int> truth, int k) {
  if (pred.size() != truth.size())
    throw input_error(fmt::format("prediction/truth length mismatch: {} vs {}",
                                  pred.size(), truth.size()));
  if (k < 1)
    throw input_error("classification_metrics needs K >= 1");
  EvalResult r;
  r.confusion.assign(k, std::vector<std::size_t>(k, 0));
  std::size_t correct = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] < 0 || pred[i] >= k || truth[i] < 0 || truth[i] >= k)
      throw input_error(fmt::format("label out of range at index {}", i));
    ++r.confusion[truth[i]][pred[i]];
    correct += pred[i] == truth[i];
  }
  if (!pred.empty())
    r.accuracy = static_cast<double>(correct) / static_cast<double>(pred.size());
  return r;
}

std::string to_json(const EvalResult &r) {
  using nlohmann::ordered_json;
  ordered_json doc;
  ordered_json per_class = ordered_json::object();
  for (const auto &s : r.per_class)
    per_class[s.name] = s.ap ? ordered_json(*s.ap) : ordered_json(nullptr);
  doc["per_class_ap"] = per_class;
  doc["map50"] = r.map50 ? ordered_json(*r.map50) : ordered_json(nullptr);
  doc["accuracy"] = r.accuracy ? ordered_json(*r.accuracy) : ordered_json(nullptr);
  doc["confusion"] = r.confusion;
  ordered_json counts = ordered_json::object();
  for (const auto &s : r.per_class)
    counts[s.name] = {{"ground_truth", s.n_ground_truth},
                      {"true_positives", s.true_positives},
                      {"false_positives", s.false_positives}};
  doc["counts"] = counts;
  return doc.dump(2) + "\n";
}

std::string to_text(const EvalResult &r) {
  std::string out;
  if (!r.per_class.empty()) {
    out += fmt::format("{:<12} {:>8} {:>8} {:>8} {:>10}\n", "class", "gt", "tp",
                       "fp", "AP@0.5");
    for (const auto &s : r.per_class)
      out += fmt::format("{:<12} {:>8} {:>8} {:>8} {:>10}\n", s.name,
                         s.n_ground_truth, s.true_positives, s.false_positives,
                         s.ap ? fmt::format("{:.4f}", *s.ap) : std::string("-"));
    if (r.map50)
      out += fmt::format("mAP@0.5 {:.4f}\n", *r.map50);
  }
  if (!r.confusion.empty()) {
    out += "confusion (rows truth, cols predicted)\n";
    for (const auto &row : r.confusion) {
      for (std::size_t j = 0; j < row.size(); ++j)
        out += fmt::format("{}{:>6}", j ? " " : "", row[j]);
      out += '\n';
    }
    if (r.accuracy)
      out += fmt::format("overall accuracy {:.4f}\n", *r.accuracy);
  }
  return out;
}

} // namespace holoprep::eval
