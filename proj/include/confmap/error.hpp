#pragma once

#include <stdexcept>
#include <string>

namespace confmap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid curve or region parameters, or an ambiguous point location.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// Singular points on the wrong side of a boundary, or degenerate neighbours.
class ArrangementError : public Error {
public:
    using Error::Error;
};

/// Evaluation point coincides with a kernel singularity.
class SingularKernelError : public Error {
public:
    using Error::Error;
};

/// Collocation system could not be solved to the required residual.
class SolverError : public Error {
public:
    using Error::Error;
};

/// Operation not available for the given kernel or case.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Malformed run configuration; the message carries the JSON field path.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace confmap
