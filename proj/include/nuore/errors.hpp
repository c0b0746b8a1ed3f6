#pragma once

#include <stdexcept>
#include <string>

namespace nuore {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ring construction rejected the descriptor (bad sizes, missing refs, ...).
class BadDescriptorError : public Error {
 public:
  using Error::Error;
};

// Structure constants fail associativity; message carries a witness triple.
class NonAssociativeError : public Error {
 public:
  using Error::Error;
};

// Structure constants are incompatible with the additive orders.
class NonDistributiveError : public Error {
 public:
  using Error::Error;
};

// Operands belong to different rings or Ore contexts.
class BackendMismatchError : public Error {
 public:
  using Error::Error;
};

// The operation needs a finite carrier.
class InfiniteRingError : public Error {
 public:
  using Error::Error;
};

// Finite but beyond the enumeration cap.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

class NotIdempotentError : public Error {
 public:
  using Error::Error;
};

// An operation required delta(e) = 0 and it is not.
class DeltaNonzeroError : public Error {
 public:
  using Error::Error;
};

class UnsupportedBackendError : public Error {
 public:
  using Error::Error;
};

// Map validation failures; messages carry witness pairs.
class NotMultiplicativeError : public Error {
 public:
  using Error::Error;
};

class LeibnizError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A structural certificate hypothesis is not carried as a proven flag.
class HypothesisError : public Error {
 public:
  using Error::Error;
};

class TorsionError : public Error {
 public:
  using Error::Error;
};

class BadBoundError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace nuore
