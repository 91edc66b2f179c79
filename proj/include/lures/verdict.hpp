#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lures/element_set.hpp"

namespace lures {

/// Raised for invalid structures and misuse (duplicate labels, cycles,
/// missing bounds, non-lattice input to a lattice-only operation, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input error with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Falsifying assignment of a universally quantified property.
struct Witness {
  std::vector<std::pair<std::string, Element>> assignment;
  /// Set-valued variables (closed sets in strict modularity, for instance).
  std::vector<std::pair<std::string, ElementSet>> sets;
  std::string note;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, std::move(w)}; }
  static Verdict from(std::optional<Witness> w) {
    return w ? fail(std::move(*w)) : pass();
  }

  explicit operator bool() const { return holds; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

}  // namespace lures
