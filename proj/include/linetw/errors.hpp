#pragma once

#include <stdexcept>
#include <string>

namespace linetw {

// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// A part list that is not a valid multipartite spec (empty part, bad count, ...).
class invalid_spec_error : public error {
public:
    using error::error;
};

// Spec shape the requested construction does not cover (star, complete, k < 2).
class unsupported_shape_error : public error {
public:
    using error::error;
};

// Instance exceeds an exhaustive-search budget; raise the budget to proceed.
class budget_error : public error {
public:
    using error::error;
};

// Arguments outside an operation's domain (non-permutation order, n too small, ...).
class domain_error : public error {
public:
    using error::error;
};

// Decomposition that is structurally broken (out-of-range vertex, non-tree edges);
// distinct from one that merely fails the validation axioms.
class malformed_decomposition_error : public error {
public:
    using error::error;
};

// Unreadable .gr / .td / spec-string input.
class parse_error : public error {
public:
    using error::error;
};

} // namespace linetw
