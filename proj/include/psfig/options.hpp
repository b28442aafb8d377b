// options.hpp - psfig option strings
//
// An option string is a comma-separated list of key=value items applied left
// to right; a later item for the same key overwrites the earlier one.
//
//   key               value
//   file, figure      path, stored verbatim
//   bbllx bblly       dimension
//   bburx bbury       dimension
//   height width      dimension
//   rheight rwidth    dimension
//   prolog postlog    path, stored verbatim
//   clip              ignored; bare "clip" is accepted
//   cost              decimal integer (default 10)
//
// Values may not contain ',' or '='.

#pragma once

#include "psfig/texdim.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace psfig {

struct FigOptions {
    std::string file;
    std::optional<Scaled> bbllx, bblly, bburx, bbury;
    std::optional<Scaled> height, width;
    std::optional<Scaled> rheight, rwidth;
    std::optional<std::string> prolog, postlog;
    bool clip = false;
    int cost = 10;

    bool has_full_bb() const { return bbllx && bblly && bburx && bbury; }

    friend bool operator==(const FigOptions&, const FigOptions&) = default;
};

FigOptions apply_key(FigOptions opts, std::string_view key, std::string_view value);

FigOptions parse_options(std::string_view text);

} // namespace psfig
