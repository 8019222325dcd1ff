#pragma once

#include <stdexcept>
#include <string>

namespace sifca {

// Root of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateRayError : public Error {
 public:
  using Error::Error;
};

class NegativeRadiusError : public Error {
 public:
  using Error::Error;
};

class NonCanonicalAngleError : public Error {
 public:
  using Error::Error;
};

class TopologySizeError : public Error {
 public:
  using Error::Error;
};

class DuplicatePointError : public Error {
 public:
  using Error::Error;
};

class NearDuplicatePointError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class SweepSpecError : public Error {
 public:
  using Error::Error;
};

class NonPositiveCostError : public Error {
 public:
  using Error::Error;
};

class InfeasibleFieldError : public Error {
 public:
  using Error::Error;
};

class StepTooSmallError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sifca
