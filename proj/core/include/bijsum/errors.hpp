#pragma once

#include <stdexcept>
#include <string>

namespace bijsum {

// Thrown when a requested computation exceeds a configured resource cap
// (DP states, enumerated characters, injection pairs, memo entries).
// The CLI maps this to its own exit code, distinct from bad arguments.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bijsum
