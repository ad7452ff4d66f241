#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pursuit {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : Error("graph6 parse error at byte " + std::to_string(offset) + ": " + what), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class UnsupportedSizeError : public Error {
public:
    using Error::Error;
};

class ArgumentError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class DisconnectedError : public Error {
public:
    using Error::Error;
};

// Input violates a stated precondition (wrong diameter, not an edge, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A certified decomposition failed one of its checks; the graph lies outside the class.
class InvalidInputError : public Error {
public:
    using Error::Error;
};

// Graph is not in the class a strategy was written for.
class ClassError : public Error {
public:
    using Error::Error;
};

class ResourceError : public Error {
public:
    ResourceError(const std::string& what, std::uint64_t states)
        : Error(what + " (" + std::to_string(states) + " states)"), states_(states) {}

    std::uint64_t states() const { return states_; }

private:
    std::uint64_t states_;
};

class BoundExceededError : public Error {
public:
    using Error::Error;
};

class NoWinningMoveError : public Error {
public:
    using Error::Error;
};

} // namespace pursuit

namespace pursuit {

// A policy produced a move that is not stay-or-one-edge for some cop.
class IllegalMoveError : public Error {
public:
    using Error::Error;
};

} // namespace pursuit
