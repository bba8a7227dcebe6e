#pragma once

#include <stdexcept>
#include <string>

namespace netgrowth {

// Base class for every error this library raises on bad input or bad data.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A count (problem count, lexicon size, node count, ratio) must be positive.
struct NonPositiveCount : Error {
    using Error::Error;
};

// Observation times out of order (t2 must be strictly later than t1).
struct TimeOrder : Error {
    using Error::Error;
};

// Input outside the mathematical domain of the operation (e.g. ratio error <= -1).
struct DegenerateInput : Error {
    using Error::Error;
};

// Logarithm base S <= 1: the scaling formula has no meaning there.
struct DegenerateBase : Error {
    using Error::Error;
};

// A proportion (clustering coefficient, labor participation) outside its range.
struct BadProportion : Error {
    using Error::Error;
};

struct EmptyInput : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Quantities ordered the wrong way round (e.g. present count not above origin count).
struct BadOrdering : Error {
    using Error::Error;
};

// Graph has unreachable node pairs and the caller asked for strict averaging.
struct Disconnected : Error {
    using Error::Error;
};

// Fewer than two effective nodes; pairwise averages are undefined.
struct TooSmall : Error {
    using Error::Error;
};

// Invalid small-world generator parameters.
struct BadSpec : Error {
    using Error::Error;
};

// Registry lookup with a key that is not in the documented key list.
struct UnknownKey : Error {
    using Error::Error;
};

// Malformed input file; message includes the 1-based line number.
struct ParseError : Error {
    using Error::Error;
};

// Command invoked with a bad flag combination. Maps to the usage exit code
// rather than the data-error one.
struct UsageError : Error {
    using Error::Error;
};

// Structurally valid file whose values violate a domain invariant;
// message names the invariant.
struct ValidationError : Error {
    using Error::Error;
};

} // namespace netgrowth
