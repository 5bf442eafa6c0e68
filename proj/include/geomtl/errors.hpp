#pragma once

#include <stdexcept>
#include <string>

namespace geomtl {

// Shape mismatch between tensors (fatal; message names both shapes).
class ShapeError : public std::runtime_error {
 public:
  explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Operation called in an invalid lifecycle state (e.g. backward before forward).
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

// Bad input values or an infeasible configuration.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// File / serialization failures.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// A metric that is undefined for the given inputs (never silently defaulted).
class MetricError : public std::runtime_error {
 public:
  explicit MetricError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geomtl
