#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace vsgraph {

/// Thrown when a hypervector dimension is zero or otherwise unusable.
class InvalidDimension : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A required file is missing or unreadable. `path()` names the file.
class IoError : public std::runtime_error {
 public:
  IoError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}
  [[nodiscard]] const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Malformed input file. `line()` is 1-based, or 0 when not line-specific.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + (line ? ":" + std::to_string(line) : std::string{}) + ": " +
                           what),
        line_(line) {}
  [[nodiscard]] std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Serialized model has an unknown version or an incompatible shape.
class FormatVersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vsgraph
