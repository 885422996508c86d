#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A pair of matrices fed to a homology computation does not compose to zero.
struct CompositionNotZero : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

// A polynomial that must be weight-homogeneous is not.
struct NotHomogeneous : Error {
    using Error::Error;
};

// Relations fail the graded regular-sequence criterion.
struct NotCompleteIntersection : Error {
    using Error::Error;
};

// An algebra map given on generators does not kill a defining relation.
struct RelationNotRespected : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& msg, std::size_t off)
        : Error(msg + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

struct UnknownVariable : Error {
    std::string name;
    UnknownVariable(const std::string& n, std::size_t off)
        : Error("unknown variable '" + n + "' (at offset " + std::to_string(off) + ")"),
          name(n), offset(off) {}
    std::size_t offset;
};

}  // namespace chom
