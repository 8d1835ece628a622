#pragma once

#include <stdexcept>
#include <string>

namespace votedim {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Ill-formed arguments: out-of-range indices, failed preconditions.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// A coalition or node set used with a game or hypergraph of a different size.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Exhaustive operation refused because the instance exceeds its size guard.
class ResourceGuard : public Error {
public:
    using Error::Error;
};

// Malformed textual input (CSV, JSON, rational literals).
class ParseError : public Error {
public:
    using Error::Error;
};

// A certificate or proof object could not be built or did not verify.
class ConstructionError : public Error {
public:
    using Error::Error;
};

}  // namespace votedim
