#pragma once

#include <stdexcept>
#include <string>

namespace arrcrit {

/// Raised for malformed input and violated preconditions anywhere in the
/// library. The CLI maps it to exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace arrcrit
