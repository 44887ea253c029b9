#pragma once

#include <stdexcept>
#include <string>

namespace gsd {

// Malformed or inconsistent input data (CSV, config, table invariants).
class data_error : public std::runtime_error {
public:
    explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

// The requested threshold admits no normalized representation
// (the constraint polytope is empty).
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Solver gave up (iteration limit) or produced output that violates a
// mathematically guaranteed property; never silently absorbed.
class solver_error : public std::logic_error {
public:
    explicit solver_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace gsd
