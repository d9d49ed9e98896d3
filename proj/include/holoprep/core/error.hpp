#pragma once

#include <stdexcept>
#include <string>

namespace holoprep {

// Broad failure category; the CLI maps these onto exit codes.
enum class ErrorKind { Input, Config, Io };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

inline Error input_error(const std::string &what) {
  return Error(ErrorKind::Input, what);
}
inline Error config_error(const std::string &what) {
  return Error(ErrorKind::Config, what);
}
inline Error io_error(const std::string &what) {
  return Error(ErrorKind::Io, what);
}

} // namespace holoprep
