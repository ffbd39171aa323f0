#pragma once

#include <stdexcept>
#include <string>

namespace tda {

/// Malformed or inconsistent input data (dimension mismatch, bad CSV, out of range index).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parameter outside its admissible range (p < 1, negative radius, ...).
class parameter_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operation not implemented for the requested dimension.
class unsupported_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A complex violates face closure or filtration order.
class structure_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// CSV row could not be parsed. Carries the 1-based row number.
class parse_error : public input_error {
 public:
  parse_error(std::size_t row, const std::string& what)
      : input_error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

}  // namespace tda
