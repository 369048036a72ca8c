#pragma once

#include <stdexcept>
#include <string>

namespace pstab {

// Malformed or out-of-contract input (bad word, wrong tableau class, shape mismatch).
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A pair of tableaux that is not in the relevant stable pairs set.
class not_in_stable_set : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive enumeration was asked to exceed its configured budget.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A broken internal invariant, e.g. an inexact division in a closed formula.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace pstab
