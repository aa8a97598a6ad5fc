#pragma once

#include <stdexcept>
#include <string>

namespace braidtwist {

/// Raised for invalid input or violated operation preconditions.
class braid_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The handle-reduction or bracketing safety cap was hit.
class step_cap_exceeded : public braid_error {
public:
    using braid_error::braid_error;
};

/// An internal consistency check failed; indicates a bug, not bad input.
class internal_error : public braid_error {
public:
    using braid_error::braid_error;
};

}  // namespace braidtwist
