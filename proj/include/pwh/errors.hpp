#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pwh {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Parameter sets outside the two classified families, malformed rationals.
class InvalidParams : public Error {
public:
    using Error::Error;
};

// A coherent state or measure was requested outside its existence domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Shape/size preconditions (window, truncation order, dimension mismatch).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Moment sequence is not a positive-definite Stieltjes sequence.
class MeasureError : public Error {
public:
    enum class Minor { hankel, shifted_hankel, none };

    MeasureError(const std::string& what, Minor minor, std::size_t order)
        : Error(what), minor_(minor), order_(order) {}

    Minor minor() const noexcept { return minor_; }
    // Size of the first non-positive leading minor.
    std::size_t order() const noexcept { return order_; }

private:
    Minor minor_;
    std::size_t order_;
};

}  // namespace pwh
