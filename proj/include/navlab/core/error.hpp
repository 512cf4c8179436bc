#pragma once

#include <stdexcept>
#include <string>

namespace navlab {

/// A referenced file is missing or unreadable.
class FileError : public std::runtime_error {
 public:
  explicit FileError(const std::string& what) : std::runtime_error(what) {}
};

/// A file exists but its contents are not valid for its format.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

/// Configuration is inconsistent or references something unavailable.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace navlab
