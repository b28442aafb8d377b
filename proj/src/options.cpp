// options.cpp - option string dispatch

#include "psfig/options.hpp"

#include "psfig/error.hpp"

#include <charconv>

namespace psfig {

namespace {

using DimensionField = std::optional<Scaled> FigOptions::*;

std::optional<DimensionField> dimension_field(std::string_view key) {
    if (key == "bbllx") return &FigOptions::bbllx;
    if (key == "bblly") return &FigOptions::bblly;
    if (key == "bburx") return &FigOptions::bburx;
    if (key == "bbury") return &FigOptions::bbury;
    if (key == "height") return &FigOptions::height;
    if (key == "width") return &FigOptions::width;
    if (key == "rheight") return &FigOptions::rheight;
    if (key == "rwidth") return &FigOptions::rwidth;
    return std::nullopt;
}

int parse_cost(std::string_view value) {
    std::string_view digits = value;
    if (!digits.empty() && digits.front() == '+')
        digits.remove_prefix(1);
    int cost = 0;
    const auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), cost);
    if (digits.empty() || ec != std::errc{} || end != digits.data() + digits.size())
        throw Error(ErrorCode::bad_cost, "cost must be a decimal integer, got '" + std::string(value) + "'");
    return cost;
}

} // namespace

FigOptions apply_key(FigOptions opts, std::string_view key, std::string_view value) {
    if (key == "file" || key == "figure") {
        opts.file = value;
    } else if (auto field = dimension_field(key)) {
        opts.*(*field) = parse_dimension(value);
    } else if (key == "prolog") {
        opts.prolog = std::string(value);
    } else if (key == "postlog") {
        opts.postlog = std::string(value);
    } else if (key == "clip") {
        opts.clip = true;
    } else if (key == "cost") {
        opts.cost = parse_cost(value);
    } else {
        throw Error(ErrorCode::unknown_key, "unknown key '" + std::string(key) + "'");
    }
    return opts;
}

FigOptions parse_options(std::string_view text) {
    FigOptions opts;
    if (text.empty())
        return opts;

    std::size_t start = 0;
    for (int index = 1;; ++index) {
        const std::size_t comma = text.find(',', start);
        const std::string_view item =
            text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const std::string where =
            " (item " + std::to_string(index) + " at offset " + std::to_string(start) + ")";
        if (item.empty())
            throw Error(ErrorCode::empty_item, "empty option item" + where);

        const std::size_t eq = item.find('=');
        const std::string_view key = item.substr(0, eq);
        if (eq == std::string_view::npos && key != "clip") {
            if (key == "file" || key == "figure" || dimension_field(key) || key == "prolog" ||
                key == "postlog" || key == "cost")
                throw Error(ErrorCode::missing_value, "missing '=' after key '" + std::string(key) + "'" + where);
            throw Error(ErrorCode::unknown_key, "unknown key '" + std::string(key) + "'" + where);
        }
        const std::string_view value = eq == std::string_view::npos ? std::string_view{} : item.substr(eq + 1);
        if (value.find('=') != std::string_view::npos)
            throw Error(ErrorCode::bad_value, "value may not contain '='" + where);
        try {
            opts = apply_key(std::move(opts), key, value);
        } catch (const Error& e) {
            throw Error(e.code(), e.what() + where);
        }

        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return opts;
}

} // namespace psfig
