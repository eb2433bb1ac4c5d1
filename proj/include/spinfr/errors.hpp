#pragma once

#include <stdexcept>
#include <string>

namespace spinfr {

// Malformed or inconsistent configuration input. CLI exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// A numerical consistency check failed (guard violated, inconsistent
// measurement inputs, dimension cap exceeded). CLI exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what) : std::runtime_error(what) {}
};

// Filesystem failure while reading or writing artifacts. CLI exit code 4.
class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinfr
