#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "pdm/types.hpp"

namespace pdm {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed profile text. `offset` is the byte position of the offending token.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// An expression was evaluated outside its domain (log of a non-positive
/// number, division by zero, non-finite result, ...).
class DomainError : public Error {
public:
    DomainError(const std::string& what, real x);
    real x() const noexcept { return x_; }

private:
    real x_;
};

/// The mass fell below the positivity floor.
class PositivityError : public Error {
public:
    PositivityError(real x, real mass, real floor);
    real x() const noexcept { return x_; }

private:
    real x_;
};

/// Grid construction or grid/function mismatch problems.
class GridError : public Error {
public:
    using Error::Error;
};

/// A sampled function produced a non-finite value.
class NonFiniteError : public Error {
public:
    NonFiniteError(std::size_t node, real x);
    std::size_t node() const noexcept { return node_; }

private:
    std::size_t node_;
};

/// A state does not decay to the required level at the domain edges.
class DecayError : public Error {
public:
    DecayError(const std::string& what, real boundary_magnitude, real suggested_lo, real suggested_hi);
    real boundary_magnitude() const noexcept { return magnitude_; }
    real suggested_lo() const noexcept { return lo_; }
    real suggested_hi() const noexcept { return hi_; }

private:
    real magnitude_;
    real lo_;
    real hi_;
};

/// Invalid model or ordering parameters.
class ParameterError : public Error {
public:
    using Error::Error;
};

}  // namespace pdm
