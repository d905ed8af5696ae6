#pragma once

#include <stdexcept>
#include <string>

namespace kred {

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operand that must be coprime to the modulus is not.
struct NotCoprimeError : Error {
    using Error::Error;
};

/// A T-transformation input lies outside U_k.
struct InvalidRegionError : Error {
    using Error::Error;
};

/// An analysis operation requires a perfect-square modulus.
struct NotSquareError : Error {
    using Error::Error;
};

/// The modulus does not meet an operation's structural requirement.
struct InvalidModulusError : Error {
    using Error::Error;
};

/// A precondition on plain arguments was violated.
struct ArgumentError : Error {
    using Error::Error;
};

}  // namespace kred
