#pragma once

#include <stdexcept>
#include <string>

namespace sumref {

/// Bad user input or violated operation precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An identity the refinement theorem guarantees failed to hold.
/// This always indicates an implementation bug, never a bad instance.
class InternalCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace sumref
