#ifndef CANON_ERROR_HPP
#define CANON_ERROR_HPP

#include <stdexcept>

namespace canon {

/// Malformed user input: bad coefficient strings, violated preconditions.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed; signals a bug, not bad input.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace canon

#endif
