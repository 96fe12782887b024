#pragma once

#include <stdexcept>
#include <string>

namespace gmac {

/// Rejected user input: malformed data, violated preconditions.
class InvalidInput : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A computed object failed an identity that must hold by construction.
class InternalError : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

}  // namespace gmac
