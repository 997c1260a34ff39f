#pragma once

#include <stdexcept>
#include <string>

namespace bellman {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A spectrum left the interval a scalar function is defined on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An operand is too close to singular for a congruence inversion.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

/// A stated hypothesis of an inequality is not satisfied.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

/// Serialized input does not match the expected layout.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Campaign configuration is malformed; the message carries source:line.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace bellman
