#pragma once

#include <stdexcept>
#include <string>

namespace symtensor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad shapes, out-of-range indices, malformed input documents.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A 64-bit combinatorial count does not fit.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A dense tensor would exceed the configured entry cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// compress() was handed a tensor that is not symmetric within tolerance.
class SymmetryError : public Error {
 public:
  using Error::Error;
};

/// Generic-rank formulas only hold for order k > 2.
class UnsupportedOrderError : public Error {
 public:
  using Error::Error;
};

/// The finiteness corollary does not cover the Alexander-Hirschowitz exceptions.
class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// The 2x2x2 pencil has a double root or vanishes identically.
class DegeneratePencilError : public Error {
 public:
  using Error::Error;
};

}  // namespace symtensor
