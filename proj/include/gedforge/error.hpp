#pragma once

#include <stdexcept>
#include <string>

namespace gedforge {

struct InvalidPathError : std::runtime_error {
  explicit InvalidPathError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidOpError : std::runtime_error {
  explicit InvalidOpError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyGraphError : std::runtime_error {
  explicit EmptyGraphError(const std::string& what) : std::runtime_error(what) {}
};

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gedforge
