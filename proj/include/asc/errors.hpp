#pragma once

#include <stdexcept>
#include <string>

namespace asc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inputs disagree on ambient dimension, subspace dimension or shape.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NontrivialIntersection : public Error {
 public:
  using Error::Error;
};

/// Requested dimensions do not fit inside the ambient space.
class DimensionOverflow : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class TrivialCharacter : public Error {
 public:
  using Error::Error;
};

class DegreeConditionViolated : public Error {
 public:
  using Error::Error;
};

/// Malformed field parameters (non-prime characteristic, q too large, ...).
class InvalidField : public Error {
 public:
  using Error::Error;
};

/// A construction would produce more codewords than the configured cap.
class SizeOverflow : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search was asked to run over more codewords than allowed.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

class LengthMismatch : public Error {
 public:
  using Error::Error;
};

class RankDeficient : public Error {
 public:
  using Error::Error;
};

class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of a closed-form bound.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyCode : public Error {
 public:
  using Error::Error;
};

/// A rejection sampler gave up after its retry budget.
class RetryExhausted : public Error {
 public:
  using Error::Error;
};

/// Invalid specification handed to a constructor (bad k, bad codebook, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace asc
