#pragma once

#include <stdexcept>
#include <string>

namespace modasc {

// Precondition violated by the caller (malformed word, wrong class, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Requested size is above the configured enumeration cap.
class CapExceeded : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

// A (pattern, class) pair without a closed formula.
class NoClosedForm : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A derived structural property failed to hold; indicates a bug.
class InternalConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace modasc
