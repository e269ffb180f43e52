#pragma once

#include <stdexcept>

namespace olives {

// A move that is not available at the state it is applied to.
struct IllegalMove : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The empty table was reached before the final move of a game.
struct PrematureEmpty : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A move sequence that does not end on the empty table.
struct NotClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration requested above the configured ceiling.
struct CeilingExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The interned state space grew past its configured cap.
struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A partition sequence that is not a closed walk in Young's lattice.
struct InvalidWalk : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed partition, move or game text.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace olives
