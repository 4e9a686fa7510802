#pragma once

#include <stdexcept>
#include <string>

namespace arrmorse {

/// Base class for all arrmorse errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Input validation failures while building an Arrangement / Weights.
class ParseError : public Error {
public:
    using Error::Error;
};

class ZeroLinearPart : public ParseError {
public:
    using ParseError::ParseError;
};

/// Two functionals with proportional (a, c) define the same hyperplane.
class DuplicateHyperplane : public ParseError {
public:
    using ParseError::ParseError;
};

/// Weight vector length does not match the number of hyperplanes.
class LengthMismatch : public ParseError {
public:
    using ParseError::ParseError;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// Evaluation requested at a point numerically on one of the hyperplanes.
class PointOnArrangement : public Error {
public:
    using Error::Error;
};

/// Operation requires an essential arrangement (rank == ambient dimension).
class NotEssential : public Error {
public:
    using Error::Error;
};

/// Operation requires a central arrangement (non-empty common intersection).
class NonCentralArrangement : public Error {
public:
    using Error::Error;
};

/// Certification was asked for a point whose residual is not small.
class NotCriticalPoint : public Error {
public:
    using Error::Error;
};

/// Hessian eigenvalue below the relative degeneracy threshold.
class DegenerateCritical : public Error {
public:
    using Error::Error;
};

/// Rejection sampling near a flat ran out of attempts.
class SamplingExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace arrmorse
