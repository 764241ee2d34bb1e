// Shared aliases, constants and error types.
#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace sisamp {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 6.28318530717958647692528676655900577;

/// Inclusive range of sampling-block indices n.
struct BlockWindow {
    long first = 0;
    long last = -1;
    long count() const { return last - first + 1; }
    bool contains(const BlockWindow& other) const {
        return first <= other.first && other.last <= last;
    }
};

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// B-spline order outside its domain (order < 1).
class InvalidOrderError : public Error {
public:
    using Error::Error;
};

/// |K_a| drops below the stability tolerance somewhere on the grid.
class DegenerateKernelError : public Error {
public:
    DegenerateKernelError(const std::string& msg, double witness)
        : Error(msg), witness_(witness) {}
    double witness() const noexcept { return witness_; }

private:
    double witness_;
};

/// det M vanished (or fell below tolerance): the scheme is not a Riesz basis.
class SingularSchemeError : public Error {
public:
    SingularSchemeError(const std::string& msg, double determinant)
        : Error(msg), determinant_(determinant) {}
    double determinant() const noexcept { return determinant_; }

private:
    double determinant_;
};

/// rank M < p: the redundant scheme does not span a frame.
class NotAFrameError : public Error {
public:
    using Error::Error;
};

/// An operator reaches outside the p consecutive offsets of one period window.
class WindowOverflowError : public Error {
public:
    using Error::Error;
};

/// Fewer channels than the period (q < p).
class UnderdeterminedError : public Error {
public:
    using Error::Error;
};

/// Sample window does not cover all blocks contributing on the evaluation grid.
class CoverageError : public Error {
public:
    CoverageError(const std::string& msg, BlockWindow required)
        : Error(msg), required_(required) {}
    BlockWindow required() const noexcept { return required_; }

private:
    BlockWindow required_;
};

/// Grid too coarse for the requested coefficient radius.
class GridError : public Error {
public:
    using Error::Error;
};

/// Malformed operator text form.
class ParseError : public Error {
public:
    using Error::Error;
};

/// Bad or inconsistent experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace sisamp
