#pragma once

#include <stdexcept>
#include <string>

namespace shg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector/matrix/measure sizes disagree with the point space or with each other.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class UnknownLabel : public Error {
 public:
  explicit UnknownLabel(const std::string& label)
      : Error("unknown point label '" + label + "'"), label_(label) {}
  const std::string& label() const noexcept { return label_; }

 private:
  std::string label_;
};

/// An operation was called on a structure that has not passed the checks it needs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input violates an algebraic requirement (non-associative table, not a subgroup, ...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace shg

namespace shg {

/// A point handed to an action or carrier operation lies outside the carrier.
class NotInCarrier : public Error {
 public:
  using Error::Error;
};

class UnsupportedSeminorm : public Error {
 public:
  using Error::Error;
};

}  // namespace shg
