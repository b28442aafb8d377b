// error.hpp - error type shared by every psfig module

#pragma once

#include <stdexcept>
#include <string>

namespace psfig {

enum class Fidelity { strict, lenient };

enum class ErrorCode {
    malformed_number,
    unknown_unit,
    overflow,
    unknown_key,
    empty_item,
    missing_value,
    bad_value,
    bad_cost,
    malformed_bb,
    no_bounding_box,
    bad_extent,
    bad_size,
    division_by_zero,
    empty_path,
    unbalanced_braces,
    io,
};

// Every failure is a domain error except io, which the CLI maps to exit 2.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    bool is_io() const noexcept { return code_ == ErrorCode::io; }

private:
    ErrorCode code_;
};

} // namespace psfig
