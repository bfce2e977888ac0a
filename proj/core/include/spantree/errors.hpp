#pragma once

#include <stdexcept>
#include <string>

namespace spantree {

/// Caller handed us something invalid: out-of-range ids, disconnected input
/// where connectivity is required, budgets below 2, and so on.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input (graph or budget files).
struct parse_error : input_error {
    using input_error::input_error;
};

/// A condition that is guaranteed by theory failed at runtime.
/// Seeing one of these always means a bug, never bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

inline void check(bool ok, const char* what) {
    if (!ok) throw internal_error(what);
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw input_error(what);
}

}  // namespace detail

}  // namespace spantree
