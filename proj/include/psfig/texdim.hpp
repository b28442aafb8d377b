// texdim.hpp - TeX dimension literals and scaled points
//
// A Scaled is an integer count of scaled points (65536 sp = 1 pt). Parsing
// follows TeX's dimension scanner: the fraction is rounded to 16 bits by the
// decimal digit loop, then the integer part and fraction are converted by the
// unit's exact num/den ratio with truncating division.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace psfig {

inline constexpr std::int64_t max_dimen = 1073741823; // 2^30 - 1
inline constexpr std::int64_t unity = 65536;

class Scaled {
public:
    constexpr Scaled() = default;
    // Throws Error{overflow} when |sp| exceeds max_dimen.
    explicit Scaled(std::int64_t sp);

    constexpr std::int32_t sp() const noexcept { return sp_; }

    friend constexpr auto operator<=>(Scaled, Scaled) = default;

private:
    std::int32_t sp_ = 0;
};

struct UnitRatio {
    std::int64_t num;
    std::int64_t den;
};

// Named units other than sp. sp is special-cased: its value is taken
// literally with any fraction discarded.
std::optional<UnitRatio> unit_ratio(std::string_view unit);

// Converts a bare decimal number (optional sign, digits, optional '.'
// fraction) in the given unit. unit may be "sp".
Scaled convert_number(std::string_view number, std::string_view unit);

Scaled parse_dimension(std::string_view text);

std::string format_sp(Scaled v);

} // namespace psfig
