#pragma once

#include <stdexcept>
#include <string>

namespace motzkin {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised for violated internal identities (a transcription bug, not bad input).
class InternalAssertion : public Error {
public:
    using Error::Error;
};

class NonZeroRemainder : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class NotSymmetric : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class NotIntegral : public InternalAssertion {
public:
    using InternalAssertion::InternalAssertion;
};

class NonUnitConstantTerm : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class MissingAssignment : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

class CeilingTooLow : public Error {
public:
    using Error::Error;
};

class Unreachable : public Error {
public:
    using Error::Error;
};

class LengthGuard : public Error {
public:
    using Error::Error;
};

}  // namespace motzkin
