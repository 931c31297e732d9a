#pragma once

#include <stdexcept>
#include <string>

namespace rootforge {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Violated precondition on caller-supplied data.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The b-doubling loop (or an oracle refinement loop) hit its configured cap.
// For isolate this usually means k was wrong.
class PrecisionCapError : public Error {
 public:
  using Error::Error;
};

class FactorizationFailed : public Error {
 public:
  using Error::Error;
};

class NonSquareFreeError : public Error {
 public:
  using Error::Error;
};

class NonCoprimeError : public Error {
 public:
  using Error::Error;
};

// Something that the theory says cannot happen did happen.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace rootforge
