#include "holoprep/core/manifest.hpp"

#include "holoprep/core/error.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <system_error>
#include <set>

namespace holoprep::core {

namespace fs = std::filesystem;
using nlohmann::json;

std::string_view to_string(Modality m) noexcept {
  return m == Modality::Optical ? "OPTICAL" : "HOLOGRAPHIC";
}

std::string_view to_string(Split s) noexcept {
  switch (s) {
  case Split::Train:
    return "TRAIN";
  case Split::Val:
    return "VAL";
  case Split::Test:
    return "TEST";
  }
  return "TRAIN";
}

Modality parse_modality(std::string_view s) {
  if (s == "OPTICAL")
    return Modality::Optical;
  if (s == "HOLOGRAPHIC")
    return Modality::Holographic;
  throw input_error("unknown modality '" + std::string(s) + "'");
}

Split parse_split(std::string_view s) {
  if (s == "TRAIN")
    return Split::Train;
  if (s == "VAL")
    return Split::Val;
  if (s == "TEST")
    return Split::Test;
  throw input_error("unknown split '" + std::string(s) + "'");
}

std::optional<int> DatasetManifest::class_index(std::string_view name) const {
  for (std::size_t i = 0; i < class_names.size(); ++i)
    if (class_names[i] == name)
      return static_cast<int>(i);
  return std::nullopt;
}

void validate(const DatasetManifest &m) {
  if (m.class_names.empty())
    throw input_error("manifest has no class names");
  std::set<std::string> names;
  for (const auto &n : m.class_names) {
    if (n.empty())
      throw input_error("empty class name");
    if (!names.insert(n).second)
      throw input_error("duplicate class name '" + n + "'");
  }
  const int k = static_cast<int>(m.class_names.size());
  std::set<std::string> paths;
  for (const auto &r : m.records) {
    if (!paths.insert(r.image_path).second)
      throw input_error("duplicate record path '" + r.image_path + "'");
    if (r.species_tag && (*r.species_tag < 0 || *r.species_tag >= k))
      throw input_error("species tag out of range in '" + r.image_path + "'");
    for (const auto &a : r.annotations) {
      validate(a);
      if (a.class_id >= k)
        throw input_error("annotation class out of range in '" +
                          r.image_path + "'");
    }
  }
}

DatasetManifest load_manifest(const fs::path &path) {
  std::ifstream in(path);
  if (!in)
    throw io_error("cannot open manifest " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception &e) {
    throw input_error("manifest " + path.string() + ": " + e.what());
  }

  DatasetManifest m;
  try {
    m.class_names = doc.at("class_names").get<std::vector<std::string>>();
    for (const auto &jr : doc.at("records")) {
      ImageRecord r;
      r.image_path = jr.at("image_path").get<std::string>();
      r.modality = parse_modality(jr.at("modality").get<std::string>());
      if (jr.contains("species_tag") && !jr["species_tag"].is_null()) {
        const auto tag = jr["species_tag"].get<std::string>();
        r.species_tag = m.class_index(tag);
        if (!r.species_tag)
          throw input_error("unknown species tag '" + tag + "' in '" +
                            r.image_path + "'");
      }
      r.label_path = jr.value("label_path", std::string());
      r.aligned = jr.value("aligned", false);
      m.records.push_back(std::move(r));
    }
    if (doc.contains("splits"))
      for (const auto &[id, name] : doc["splits"].items())
        m.splits.emplace(id, parse_split(name.get<std::string>()));
  } catch (const json::exception &e) {
    throw input_error("manifest " + path.string() + ": " + e.what());
  }

  const fs::path base = path.parent_path();
  for (auto &r : m.records) {
    if (r.label_path.empty())
      continue;
    fs::path lp = r.label_path;
    if (lp.is_relative())
      lp = base / lp;
    r.annotations = read_label_file(lp.string());
  }
  validate(m);
  return m;
}

void save_manifest(const DatasetManifest &m, const fs::path &path) {
  validate(m);
  json doc;
  doc["class_names"] = m.class_names;
  json records = json::array();
  const fs::path base = path.parent_path();
  for (const auto &r : m.records) {
    json jr;
    jr["image_path"] = r.image_path;
    jr["modality"] = to_string(r.modality);
    jr["species_tag"] = r.species_tag
                            ? json(m.class_names[*r.species_tag])
                            : json(nullptr);
    jr["label_path"] = r.label_path;
    jr["aligned"] = r.aligned;
    records.push_back(std::move(jr));
    if (!r.label_path.empty()) {
      fs::path lp = r.label_path;
      if (lp.is_relative())
        lp = base / lp;
      if (lp.has_parent_path()) {
        std::error_code ec;
        fs::create_directories(lp.parent_path(), ec);
      }
      write_label_file(lp.string(), r.annotations);
    }
  }
  doc["records"] = std::move(records);
  json splits = json::object();
  for (const auto &[id, s] : m.splits)
    splits[id] = to_string(s);
  doc["splits"] = std::move(splits);

  std::ofstream out(path, std::ios::trunc);
  if (!out)
    throw io_error("cannot write manifest " + path.string());
  out << doc.dump(2) << '\n';
  if (!out)
    throw io_error("write failed for " + path.string());
}

} // namespace holoprep::core
