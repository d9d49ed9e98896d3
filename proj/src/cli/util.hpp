#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace holoprep::cli::detail {

void write_text(const std::filesystem::path &path, const std::string &text);
std::string read_text(const std::filesystem::path &path);

// Regular files in `dir` with extension `ext` (".png"), sorted by name.
std::vector<std::filesystem::path> list_files(const std::filesystem::path &dir,
                                              const std::string &ext);

void ensure_dir(const std::filesystem::path &dir);
// Creates the directory that will hold `file`, if it has one.
void ensure_parent(const std::filesystem::path &file);

// Runs fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by any task is rethrown after all workers finish.
inline void parallel_for(std::size_t n, unsigned jobs,
                         const std::function<void(std::size_t)> &fn) {
  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i)
      fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    const std::size_t count = std::min<std::size_t>(jobs, n);
    for (std::size_t w = 0; w < count; ++w)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
              error = std::current_exception();
            next = n;
          }
        }
      });
  }
  if (error)
    std::rethrow_exception(error);
}

} // namespace holoprep::cli::detail
