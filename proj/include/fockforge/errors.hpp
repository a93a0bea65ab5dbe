#pragma once

#include <stdexcept>

namespace fockforge {

// Raised when a computed quantity contradicts a structural invariant.
class InvariantFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fockforge
