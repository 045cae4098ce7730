#pragma once

#include <stdexcept>
#include <string>

namespace mdsgit {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Input violates a structural precondition (invalid fan, rank-deficient weights, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Linearization lies on a wall of the chamber decomposition.
class DegenerateLinearization : public Error {
public:
    using Error::Error;
};

/// Linearization outside the G-ample cone: the semistable locus is empty.
class EmptySemistableLocus : public Error {
public:
    using Error::Error;
};

}  // namespace mdsgit
