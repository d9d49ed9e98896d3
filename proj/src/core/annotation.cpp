#include "holoprep/core/annotation.hpp"

#include "holoprep/core/error.hpp"

#include <fmt/format.h>

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace holoprep::core {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
      ++j;
    if (j > i)
      out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <typename T> std::optional<T> parse_number(std::string_view s) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    return std::nullopt;
  return value;
}

// Returns an error message, or empty when the line is acceptable.
std::string parse_line(std::string_view line, CoordSpace space,
                       Annotation &out) {
  const auto fields = split_ws(line);
  if (fields.size() != 5 && fields.size() != 6)
    return fmt::format("expected 5 or 6 fields, got {}", fields.size());

  auto cls = parse_number<int>(fields[0]);
  if (!cls)
    return fmt::format("non-numeric class '{}'", fields[0]);
  if (*cls < kUnknownClass)
    return fmt::format("invalid class {}", *cls);

  double v[5] = {};
  for (std::size_t k = 1; k < fields.size(); ++k) {
    auto d = parse_number<double>(fields[k]);
    if (!d || !std::isfinite(*d))
      return fmt::format("non-numeric field '{}'", fields[k]);
    v[k - 1] = *d;
  }

  out.box = BBox{v[0], v[1], v[2], v[3], space};
  if (!(out.box.w > 0.0) || !(out.box.h > 0.0))
    return "width and height must be > 0";
  if (space == CoordSpace::Normalized) {
    if (v[0] < 0.0 || v[0] > 1.0 || v[1] < 0.0 || v[1] > 1.0 || v[2] > 1.0 ||
        v[3] > 1.0)
      return "coordinate out of range [0,1]";
  } else if (v[0] < 0.0 || v[1] < 0.0) {
    return "negative pixel coordinate";
  }

  out.class_id = *cls;
  out.confidence.reset();
  if (fields.size() == 6) {
    if (v[4] < 0.0 || v[4] > 1.0)
      return "confidence out of range [0,1]";
    out.confidence = v[4];
  }
  out.source = (out.class_id == kUnknownClass || out.confidence)
                   ? LabelSource::Auto
                   : LabelSource::Manual;
  return {};
}

} // namespace

void validate(const Annotation &a) {
  validate(a.box);
  if (a.class_id < kUnknownClass)
    throw input_error(fmt::format("invalid class id {}", a.class_id));
  if (a.source == LabelSource::Manual) {
    if (a.class_id == kUnknownClass)
      throw input_error("manual annotation requires a concrete class");
    if (a.confidence)
      throw input_error("manual annotation cannot carry a confidence");
  }
  if (a.confidence && (*a.confidence < 0.0 || *a.confidence > 1.0))
    throw input_error("confidence outside [0,1]");
}

LabelParseResult parse_label_file(std::string_view text, CoordSpace space) {
  LabelParseResult result;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    if (split_ws(line).empty()) {
      if (end == text.size())
        break;
      continue;
    }
    Annotation a;
    std::string err = parse_line(line, space, a);
    if (err.empty())
      result.annotations.push_back(a);
    else
      result.issues.push_back({line_no, std::move(err)});
    if (end == text.size())
      break;
  }
  return result;
}

std::string emit_label_file(std::span<const Annotation> annotations) {
  std::string out;
  for (std::size_t i = 0; i < annotations.size(); ++i) {
    const Annotation &a = annotations[i];
    if (a.box.space != CoordSpace::Normalized)
      throw input_error(fmt::format("annotation {} is not normalized", i));
    const BBox &b = a.box;
    if (b.cx < 0.0 || b.cx > 1.0 || b.cy < 0.0 || b.cy > 1.0 || !(b.w > 0.0) ||
        b.w > 1.0 || !(b.h > 0.0) || b.h > 1.0)
      throw input_error(
          fmt::format("annotation {} lies outside normalized range", i));
    out += fmt::format("{} {:.6f} {:.6f} {:.6f} {:.6f}", a.class_id, b.cx, b.cy,
                       b.w, b.h);
    if (a.confidence)
      out += fmt::format(" {:.6f}", *a.confidence);
    out += '\n';
  }
  return out;
}

std::vector<Annotation> read_label_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot open label file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  auto parsed = parse_label_file(ss.str());
  if (!parsed.issues.empty()) {
    const auto &first = parsed.issues.front();
    throw input_error(fmt::format("{}:{}: {} ({} bad line(s))", path,
                                  first.line, first.message,
                                  parsed.issues.size()));
  }
  return std::move(parsed.annotations);
}

void write_label_file(const std::string &path,
                      std::span<const Annotation> annotations) {
  const std::string text = emit_label_file(annotations);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out)
    throw io_error("cannot write label file " + path);
  out << text;
  if (!out)
    throw io_error("write failed for " + path);
}

} // namespace holoprep::core
