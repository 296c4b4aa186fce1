#ifndef QT_ERRORS_HPP
#define QT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qt {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Invalid instance: precondition on an input value violated.
class DomainError : public Error {
  public:
    using Error::Error;
};

// Valid instance, but outside the range a certified method covers
// (e.g. the measure certificate below t = 128).
class OutOfMethodRange : public DomainError {
  public:
    using DomainError::DomainError;
};

// A needed comparison stayed undecided at the precision cap.
class PrecisionCapExceeded : public Error {
  public:
    using Error::Error;
};

// Two exact routes disagreed, or an exact invariant failed.
// Always an implementation bug, never data dependent.
class InternalConsistencyError : public Error {
  public:
    using Error::Error;
};

// A certified pipeline stage could not establish its claim.
class UncertifiedError : public Error {
  public:
    using Error::Error;
};

} // namespace qt

#endif
