#ifndef DST_ERRORS_HPP
#define DST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dst {

// Base of everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input: malformed files, ill-formed frames/masses/weights, operands on
// different frames.  The CLI maps these to exit code 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Mathematically well-posed request that the engine refuses to answer
// (total conflict, oversized frame).  The CLI maps these to exit code 3.
class RefusalError : public Error {
 public:
  using Error::Error;
};

class DuplicateElement : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TooManyElements : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class BadName : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class FrameMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class DuplicateEntry : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class OutOfRange : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class SumNotOne : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotAValidTransform : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotNormalizedInput : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class EndpointMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class KindMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class TotalConflict : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

class FrameTooLarge : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

class ZeroProbabilityEvidence : public RefusalError {
 public:
  using RefusalError::RefusalError;
};

}  // namespace dst

#endif  // DST_ERRORS_HPP
