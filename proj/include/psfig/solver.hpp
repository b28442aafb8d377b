// solver.hpp - figure geometry: extents, hundredths scaling, reserved box

#pragma once

#include "psfig/epsbb.hpp"
#include "psfig/options.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace psfig {

struct ResolvedBox {
    BoundingBox box;
    std::optional<FoundBox> scanned; // set when the file was searched
};

// All four explicit corners: used verbatim, no file access. Otherwise the
// scanned box replaces all four corners, explicit ones included.
ResolvedBox resolve_bbox(const FigOptions& opts, const FileScanner& scan, Fidelity fidelity);

// a * n / d, with n/d expanded to two truncated decimal digits:
//   a*q + (a/10)*d1 + (a/100)*d2
// Operands must be nonnegative and d positive. No range check on the result.
std::int64_t in_hundreds_raw(std::int64_t a, std::int64_t n, std::int64_t d);

// As above, but the result must fit in a Scaled.
Scaled in_hundreds(Scaled a, std::int64_t n, std::int64_t d);

struct Extents {
    Scaled width, height;
};

Extents compute_handw(const FigOptions& opts, Scaled bbw, Scaled bbh);

// Returns (rwidth, rheight).
Extents compute_resv(const FigOptions& opts, Scaled width, Scaled height, Fidelity fidelity);

struct SizePlan {
    BoundingBox bb;
    Scaled bbw, bbh;
    Scaled width, height;
    Scaled rwidth, rheight;
    bool searched = false;
    std::optional<FoundBox> found;

    friend bool operator==(const SizePlan&, const SizePlan&) = default;
};

SizePlan plan_sizes(const FigOptions& opts, const FileScanner& scan, Fidelity fidelity);

} // namespace psfig
