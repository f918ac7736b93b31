#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zardec {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand sizes do not fit together (non-square where square is needed, length mismatch).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A symmetric matrix was required.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the operation's domain (non-integral entry, empty index set, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Off-diagonal pairing of two distinct prime divisors is negative.
class AxiomError : public Error {
 public:
  using Error::Error;
};

/// Raised by the decomposition engine when an intermediate state contradicts
/// the theory (non negative-definite support, coefficient outside [0, a_i]).
class InconsistencyError : public Error {
 public:
  InconsistencyError(const std::string& what, std::size_t index)
      : Error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// The brute-force oracle found zero or several admissible decompositions.
class OracleInconsistencyError : public Error {
 public:
  using Error::Error;
};

class GenerationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace zardec
