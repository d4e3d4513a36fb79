#pragma once

#include <stdexcept>
#include <string>

namespace strot {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Structural problems: mismatched shapes, inconsistent grids, bad arguments.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Invalid run parameters (bad exponent, odd grid size, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Nonzero solenoidal forcing at a resonant mode: the gauge admits no solution.
class ResonantForcingError : public Error {
public:
    using Error::Error;
};

/// Too much field mass outside the inscribed ball; rotation would alias.
class SupportViolationError : public Error {
public:
    using Error::Error;
};

/// A temporal-mode shift pushed a nonzero coefficient out of the grid range.
class ModeShiftOverflowError : public Error {
public:
    using Error::Error;
};

/// File-format or filesystem failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace strot
