#pragma once
#include <stdexcept>

namespace fusion {

// Malformed data: wrong tensor shapes, out-of-range indices, unreadable files.
// Distinct from axiom violations, which verification routines report as findings.
struct structural_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A bounded search ran out of its node budget before finishing.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace fusion
