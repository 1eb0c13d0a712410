#pragma once

#include <stdexcept>

namespace nslg {

// Invalid user-supplied input (nonpositive scale, bad range, malformed file).
struct domain_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An internal identity that should hold analytically failed numerically,
// or mutually inconsistent quantities were combined.
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// A numerical self-check (refinement estimate, norm check) flagged the
// result as untrustworthy at the requested resolution.
struct diagnostics_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fixed-step integration could not complete even after the allowed
// number of step halvings.
struct convergence_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace nslg
