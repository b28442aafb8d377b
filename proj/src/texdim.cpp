// texdim.cpp - TeX dimension scanner and unit conversion

#include "psfig/texdim.hpp"

#include "psfig/error.hpp"

#include <array>
#include <cctype>

namespace psfig {

Scaled::Scaled(std::int64_t sp) {
    if (sp > max_dimen || sp < -max_dimen)
        throw Error(ErrorCode::overflow,
                    "dimension too large: " + std::to_string(sp) + "sp exceeds \\maxdimen");
    sp_ = static_cast<std::int32_t>(sp);
}

namespace {

struct NamedUnit {
    std::string_view name;
    UnitRatio ratio;
};

constexpr std::array<NamedUnit, 8> unit_table{{
    {"pt", {1, 1}},
    {"pc", {12, 1}},
    {"in", {7227, 100}},
    {"bp", {7227, 7200}},
    {"cm", {7227, 254}},
    {"mm", {7227, 2540}},
    {"dd", {1238, 1157}},
    {"cc", {14856, 1157}},
}};

// TeX keeps at most 17 fraction digits.
constexpr std::size_t max_fraction_digits = 17;
constexpr std::int64_t integer_limit = 2147483647;

struct Decimal {
    bool negative = false;
    std::int64_t integer = 0;
    std::int64_t fraction = 0; // 16-bit, already rounded
};

bool is_blank(char c) { return c == ' ' || c == '\t'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

void skip_blanks(std::string_view& s) {
    while (!s.empty() && is_blank(s.front()))
        s.remove_prefix(1);
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (auto& c : out)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

// round_decimals from tex.web: fold the digits from last to first into a
// 17-bit binary fraction, then round to 16 bits.
std::int64_t round_decimals(std::string_view digits) {
    std::int64_t a = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it)
        a = (a + (*it - '0') * 131072) / 10;
    return (a + 1) / 2;
}

// Consumes sign, digits and optional fraction from the front of s.
Decimal scan_decimal(std::string_view& s, std::string_view whole) {
    Decimal d;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        d.negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::size_t int_digits = 0;
    bool too_big = false;
    while (!s.empty() && is_digit(s.front())) {
        if (!too_big) {
            d.integer = d.integer * 10 + (s.front() - '0');
            too_big = d.integer > integer_limit;
        }
        ++int_digits;
        s.remove_prefix(1);
    }
    std::size_t frac_digits = 0;
    if (!s.empty() && s.front() == '.') {
        s.remove_prefix(1);
        std::size_t n = 0;
        while (n < s.size() && is_digit(s[n]))
            ++n;
        frac_digits = n;
        d.fraction = round_decimals(s.substr(0, std::min(n, max_fraction_digits)));
        s.remove_prefix(n);
    }
    if (int_digits + frac_digits == 0)
        throw Error(ErrorCode::malformed_number,
                    "malformed number in dimension '" + std::string(whole) + "'");
    if (too_big)
        throw Error(ErrorCode::overflow, "number too big in '" + std::string(whole) + "'");
    return d;
}

Scaled convert(const Decimal& d, std::string_view unit, std::string_view whole) {
    std::int64_t value = 0;
    const std::string u = lower(unit);
    if (u == "sp") {
        value = d.integer;
    } else if (auto ratio = unit_ratio(u)) {
        const auto [num, den] = *ratio;
        const std::int64_t q = d.integer * num / den;
        const std::int64_t r = d.integer * num - q * den;
        const std::int64_t f = (num * d.fraction + unity * r) / den;
        value = q * unity + f;
    } else if (u == "em" || u == "ex" || u == "mu") {
        throw Error(ErrorCode::unknown_unit,
                    "font-relative unit '" + std::string(unit) + "' is not supported in '" +
                        std::string(whole) + "'");
    } else if (u.starts_with("true")) {
        throw Error(ErrorCode::unknown_unit,
                    "'true' dimensions are not supported in '" + std::string(whole) + "'");
    } else {
        throw Error(ErrorCode::unknown_unit,
                    "unknown unit '" + std::string(unit) + "' in '" + std::string(whole) + "'");
    }
    if (value > max_dimen)
        throw Error(ErrorCode::overflow, "dimension too large: '" + std::string(whole) + "'");
    return Scaled(d.negative ? -value : value);
}

} // namespace

std::optional<UnitRatio> unit_ratio(std::string_view unit) {
    for (const auto& entry : unit_table)
        if (entry.name == unit)
            return entry.ratio;
    return std::nullopt;
}

Scaled convert_number(std::string_view number, std::string_view unit) {
    std::string_view rest = number;
    const Decimal d = scan_decimal(rest, number);
    if (!rest.empty())
        throw Error(ErrorCode::malformed_number, "malformed number '" + std::string(number) + "'");
    return convert(d, unit, number);
}

Scaled parse_dimension(std::string_view text) {
    std::string_view rest = text;
    skip_blanks(rest);
    const Decimal d = scan_decimal(rest, text);
    skip_blanks(rest);
    std::size_t n = 0;
    while (n < rest.size() && std::isalpha(static_cast<unsigned char>(rest[n])))
        ++n;
    if (n == 0)
        throw Error(ErrorCode::unknown_unit, "missing unit in dimension '" + std::string(text) + "'");
    const std::string_view unit = rest.substr(0, n);
    rest.remove_prefix(n);
    skip_blanks(rest);
    if (!rest.empty())
        throw Error(ErrorCode::malformed_number,
                    "trailing characters in dimension '" + std::string(text) + "'");
    return convert(d, unit, text);
}

std::string format_sp(Scaled v) { return std::to_string(v.sp()); }

} // namespace psfig
