#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromabij {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed caller input: bad indices, mismatched sizes, invalid values.
class invalid_input_error : public error {
 public:
  using error::error;
};

/// Input lies outside the domain of a combinatorial map.
class precondition_error : public error {
 public:
  using error::error;
};

/// An enumeration would exceed (or has exceeded) the configured budget.
class budget_error : public error {
 public:
  using error::error;
};

/// Text input could not be parsed. `position` is a byte offset for graph6
/// input and a 1-based line number for edge lists.
class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chromabij
