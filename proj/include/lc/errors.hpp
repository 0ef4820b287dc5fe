#pragma once

#include <stdexcept>
#include <string>

namespace lc {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric / statistical failures (CLI exit code 3).
class NumericError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public NumericError {
 public:
  using NumericError::NumericError;
};

class SingularCovariance : public NumericError {
 public:
  using NumericError::NumericError;
};

class DegenerateData : public NumericError {
 public:
  using NumericError::NumericError;
};

class OneClassOnly : public NumericError {
 public:
  using NumericError::NumericError;
};

// Contract violations on caller-supplied values.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientPoints : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

// Input-file problems (CLI exit code 2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

}  // namespace lc
