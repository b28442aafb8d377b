// solver.cpp - size resolution with the original truncating arithmetic

#include "psfig/solver.hpp"

namespace psfig {

namespace {

void check_size(const char* what, Scaled v, Fidelity fidelity) {
    if (v.sp() < 0 || (fidelity == Fidelity::lenient && v.sp() == 0))
        throw Error(ErrorCode::bad_size,
                    std::string(what) + " must be " + (fidelity == Fidelity::lenient ? "positive" : "nonnegative") +
                        ", got " + format_sp(v) + "sp");
}

Scaled extent(Scaled lo, Scaled hi, const char* axis, Fidelity fidelity) {
    const std::int64_t e = std::int64_t{hi.sp()} - lo.sp();
    if (e <= 0) {
        std::string msg = std::string("bounding box has nonpositive ") + axis + " extent (" + std::to_string(e) + "sp)";
        if (fidelity == Fidelity::strict)
            msg += "; the original macros stop here with an arithmetic error";
        throw Error(ErrorCode::bad_extent, msg);
    }
    return Scaled(e);
}

} // namespace

ResolvedBox resolve_bbox(const FigOptions& opts, const FileScanner& scan, Fidelity) {
    if (opts.has_full_bb())
        return {{*opts.bbllx, *opts.bblly, *opts.bburx, *opts.bbury}, std::nullopt};
    if (opts.file.empty())
        throw Error(ErrorCode::no_bounding_box, std::string(no_bb_message));
    FoundBox found = scan(opts.file);
    return {found.box, std::move(found)};
}

std::int64_t in_hundreds_raw(std::int64_t a, std::int64_t n, std::int64_t d) {
    if (d == 0)
        throw Error(ErrorCode::division_by_zero, "in_hundreds: division by zero");
    if (a < 0 || n < 0 || d < 0)
        throw Error(ErrorCode::bad_size, "in_hundreds: operands must be nonnegative");
    const std::int64_t q = n / d;
    std::int64_t rem = n - q * d;
    rem *= 10;
    const std::int64_t tenths = rem / d;
    rem = (rem - tenths * d) * 10;
    const std::int64_t hundredths = rem / d;
    return a * q + (a / 10) * tenths + (a / 100) * hundredths;
}

Scaled in_hundreds(Scaled a, std::int64_t n, std::int64_t d) {
    const std::int64_t v = in_hundreds_raw(a.sp(), n, d);
    if (v > max_dimen)
        throw Error(ErrorCode::overflow, "scaled size " + std::to_string(v) + "sp exceeds \\maxdimen");
    return Scaled(v);
}

Extents compute_handw(const FigOptions& opts, Scaled bbw, Scaled bbh) {
    if (bbw.sp() <= 0 || bbh.sp() <= 0)
        throw Error(ErrorCode::bad_extent, "bounding box extents must be positive");
    if (opts.height && opts.width)
        return {*opts.width, *opts.height};
    if (opts.height)
        return {in_hundreds(*opts.height, bbw.sp(), bbh.sp()), *opts.height};
    if (opts.width)
        return {*opts.width, in_hundreds(*opts.width, bbh.sp(), bbw.sp())};
    return {bbw, bbh};
}

Extents compute_resv(const FigOptions& opts, Scaled width, Scaled height, Fidelity fidelity) {
    Extents r{opts.rwidth.value_or(width), opts.rheight.value_or(height)};
    check_size("rwidth", r.width, fidelity);
    check_size("rheight", r.height, fidelity);
    return r;
}

SizePlan plan_sizes(const FigOptions& opts, const FileScanner& scan, Fidelity fidelity) {
    ResolvedBox resolved = resolve_bbox(opts, scan, fidelity);
    SizePlan plan;
    plan.bb = resolved.box;
    plan.searched = resolved.scanned.has_value();
    plan.found = std::move(resolved.scanned);
    plan.bbw = extent(plan.bb.llx, plan.bb.urx, "horizontal", fidelity);
    plan.bbh = extent(plan.bb.lly, plan.bb.ury, "vertical", fidelity);

    const Extents size = compute_handw(opts, plan.bbw, plan.bbh);
    check_size("width", size.width, fidelity);
    check_size("height", size.height, fidelity);
    plan.width = size.width;
    plan.height = size.height;

    const Extents reserved = compute_resv(opts, plan.width, plan.height, fidelity);
    plan.rwidth = reserved.width;
    plan.rheight = reserved.height;
    return plan;
}

} // namespace psfig
