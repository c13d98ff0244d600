#pragma once

#include <stdexcept>
#include <string>

namespace nildeg {

// Bad input: invalid index, set that is not a subgroup, inconsistent flags.
struct argument_error : std::runtime_error {
  explicit argument_error(const std::string& what) : std::runtime_error(what) {}
};

// Work budget or order cap exceeded.
struct capacity_error : std::runtime_error {
  explicit capacity_error(const std::string& what) : std::runtime_error(what) {}
};

// A document is syntactically broken.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A document parsed fine but the data fails the group axioms.
struct validation_error : std::runtime_error {
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nildeg
