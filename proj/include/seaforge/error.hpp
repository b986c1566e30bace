#pragma once

#include <stdexcept>
#include <string>

namespace seaforge {

// Invalid sweep / degradation configuration. Raised before anything is written.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Manifest parse or invariant failure. `line` is 1-based, 0 when not line specific.
class ManifestError : public std::runtime_error {
public:
  ManifestError(const std::string& what, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace seaforge
