#pragma once

#include <stdexcept>
#include <string>

namespace vrm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Non-finite input or otherwise malformed argument.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A point coinciding with the base point of a chart.
class ExcludedPointError : public Error {
 public:
  using Error::Error;
};

// Bad masses, unnormalized measures, bad marginals.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Input too large for an exact routine.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Scale parameter outside [0, pi).
class ScaleError : public Error {
 public:
  using Error::Error;
};

// r >= pi: the thickening is contractible and carries no stratification.
class ContractibleRegimeError : public ScaleError {
 public:
  using ScaleError::ScaleError;
};

// Support diameter exceeds r.
class NotInThickeningError : public Error {
 public:
  using Error::Error;
};

// Measure is not in the requested stratum.
class MembershipError : public Error {
 public:
  using Error::Error;
};

class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace vrm
