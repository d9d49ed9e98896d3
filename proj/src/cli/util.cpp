#include "util.hpp"

#include "holoprep/core/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace holoprep::cli::detail {

namespace fs = std::filesystem;

void write_text(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw io_error("cannot write " + path.string());
  out << text;
  if (!out)
    throw io_error("write failed for " + path.string());
}

std::string read_text(const fs::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> list_files(const fs::path &dir, const std::string &ext) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw io_error("not a directory: " + dir.string());
  std::vector<fs::path> out;
  for (const auto &entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ext)
      out.push_back(entry.path());
  std::sort(out.begin(), out.end(), [](const fs::path &a, const fs::path &b) {
    return a.filename().string() < b.filename().string();
  });
  return out;
}

void ensure_dir(const fs::path &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw io_error("cannot create directory " + dir.string());
}

void ensure_parent(const fs::path &file) {
  if (file.has_parent_path())
    ensure_dir(file.parent_path());
}

} // namespace holoprep::cli::detail
