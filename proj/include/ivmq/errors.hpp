#pragma once

#include <stdexcept>
#include <string>

namespace ivmq {

// Input document violates a schema or a constructor precondition.
struct schema_error : std::runtime_error {
    explicit schema_error(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or search exceeded its configured budget.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// A model is internally inconsistent or a set is not representable in it.
struct model_error : std::runtime_error {
    explicit model_error(const std::string& what) : std::runtime_error(what) {}
};

// Arithmetic domain errors: indeterminate valuation, inverting zero, ...
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ivmq
