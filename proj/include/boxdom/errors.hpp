#pragma once

#include <stdexcept>
#include <string>

namespace boxdom {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A graph6 word that cannot be decoded (bad length, byte out of range, ...).
struct MalformedGraph6 : Error {
    using Error::Error;
};

// A graph exceeds the size cap of the operation at hand.
struct Oversize : Error {
    using Error::Error;
};

// A vertex index outside [0, universe).
struct IndexOutOfRange : Error {
    using Error::Error;
};

// Two vertex sets over different universes were combined.
struct UniverseMismatch : Error {
    using Error::Error;
};

// A vertex that was required to be inside a given set is not.
struct NotInSet : Error {
    using Error::Error;
};

// A set that was required to dominate a graph does not.
struct NotDominating : Error {
    using Error::Error;
};

// A set that was required to be a minimum dominating set is larger than gamma.
struct NotMinimum : Error {
    using Error::Error;
};

// A fact that is guaranteed by construction (or by a proved statement) failed
// to hold.  Always indicates an implementation bug, never bad input.
struct InvariantViolation : Error {
    using Error::Error;
};

// The input handed to a replay does not satisfy the hypothesis of the bound
// being replayed.  Bad data, not a bug.
struct HypothesisViolated : Error {
    using Error::Error;
};

// Bad sweep/hunt configuration (unknown key, unparsable value, ...).
struct ConfigError : Error {
    using Error::Error;
};

// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace boxdom
