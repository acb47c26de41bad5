#pragma once

#include <stdexcept>
#include <string>

namespace ihara {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad vertex index, unreadable file, unparsable spec string.
class InputError : public Error {
public:
    using Error::Error;
};

/// Family parameters outside the family's domain.
class ParameterError : public InputError {
public:
    using InputError::InputError;
};

/// Graph fails the engines' standing hypotheses (connected, min degree >= 2).
class ValidationError : public InputError {
public:
    using InputError::InputError;
};

/// Operation needs a structural property the graph lacks (e.g. connectivity).
class StructuralError : public InputError {
public:
    using InputError::InputError;
};

/// A requested closed form exists only as a numeric evaluator.
class UnsupportedFormError : public InputError {
public:
    using InputError::InputError;
};

/// Rank too small for the zeta special-value tree count.
class DegenerateRankError : public InputError {
public:
    using InputError::InputError;
};

/// Intentional scale limit reached (enumeration engine cap).
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// Internal arithmetic consistency failure, e.g. non-integral interpolation.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

/// A mathematical invariant of the zeta polynomial did not hold.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// Closed form and engine output disagree.
class FormulaViolation : public Error {
public:
    using Error::Error;
};

/// Two non-isomorphic rank-two graphs produced the same zeta polynomial.
class TheoremViolation : public Error {
public:
    using Error::Error;
};

} // namespace ihara
