#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matlen {

/// Operands were built over different fields (e.g. GF(5) vs GF(7), or GF(p) vs Q).
class field_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class dimension_mismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class division_by_zero : public std::domain_error {
public:
    division_by_zero() : std::domain_error("division by zero") {}
    using std::domain_error::domain_error;
};

/// Malformed scalar, field or document text.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured budget (word enumeration, n cap).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by operations that require a generating set when the span stops short of M_n.
class not_generating : public std::runtime_error {
public:
    explicit not_generating(std::size_t final_dim, std::size_t full_dim)
        : std::runtime_error("generating set spans only " + std::to_string(final_dim) + " of " +
                             std::to_string(full_dim) + " dimensions"),
          final_dim_(final_dim) {}

    [[nodiscard]] std::size_t final_dim() const noexcept { return final_dim_; }

private:
    std::size_t final_dim_;
};

}  // namespace matlen
