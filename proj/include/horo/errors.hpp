#pragma once

#include <stdexcept>
#include <string>

namespace horo {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonUnimodular : public Error {
 public:
  using Error::Error;
};

class TraceNotZero : public Error {
 public:
  using Error::Error;
};

class DomainViolation : public Error {
 public:
  using Error::Error;
};

class QuadratureUnderresolved : public Error {
 public:
  using Error::Error;
};

// Raised when an integrand is still too large at the truncation edge.
class TailToleranceExceeded : public QuadratureUnderresolved {
 public:
  using QuadratureUnderresolved::QuadratureUnderresolved;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class NonSymmetricTangent : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace horo
