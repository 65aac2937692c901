#pragma once

#include <stdexcept>
#include <string>

namespace fracgreen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter or argument lies outside the admissible domain.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Gamma function evaluated at a nonpositive integer.
class PoleError : public DomainError {
public:
    explicit PoleError(double at)
        : DomainError("Gamma function pole at x = " + std::to_string(at)), location_(at) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

/// No available method reached the requested tolerance.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved)
        : Error(what), achieved_(achieved) {}
    /// Best error estimate that was obtained (may be infinite).
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

/// Two singularities of a Gamma fraction merge into a pole of order >= 2.
class CollisionError : public Error {
public:
    explicit CollisionError(double at)
        : Error("pole collision at s = " + std::to_string(at)), location_(at) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

/// The requested operation does not apply to this parameter combination.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// alpha = beta = 2: the Green function is a pair of delta distributions.
class WaveCaseError : public Error {
public:
    WaveCaseError()
        : Error("wave case alpha = beta = 2: G(x,t) = [delta(x+t) + delta(x-t)]/2") {}
    static constexpr const char* symbolic = "G(x,t) = [delta(x+t) + delta(x-t)]/2";
};

}  // namespace fracgreen
