// emitter.cpp

#include "psfig/emitter.hpp"

namespace psfig {

namespace {

std::string corners(const BoundingBox& bb) {
    return format_sp(bb.llx) + ' ' + format_sp(bb.lly) + ' ' + format_sp(bb.urx) + ' ' + format_sp(bb.ury);
}

} // namespace

std::string_view to_string(InclusionMode mode) {
    return mode == InclusionMode::full ? "full" : "draft";
}

InclusionMode decide_mode(int cost, int draft_level) {
    return cost < draft_level ? InclusionMode::full : InclusionMode::draft;
}

std::vector<std::string> emit_specials(const SizePlan& plan, const FigOptions& opts) {
    std::vector<std::string> out;
    out.push_back("ps::[begin] " + format_sp(plan.width) + ' ' + format_sp(plan.height) + ' ' + corners(plan.bb) +
                  " startTexFig ");
    if (opts.clip)
        out.push_back("ps:: " + corners(plan.bb) + " doclip ");
    if (opts.prolog)
        out.push_back("ps: plotfile " + *opts.prolog + ' ');
    out.push_back("ps: plotfile " + opts.file + ' ');
    if (opts.postlog)
        out.push_back("ps: plotfile " + *opts.postlog + ' ');
    out.push_back("ps::[end] endTexFig ");
    return out;
}

InclusionPlan emit_full(const SizePlan& plan, const FigOptions& opts) {
    return {InclusionMode::full, emit_specials(plan, opts), plan.rwidth, plan.rheight, {}};
}

InclusionPlan emit_draft_box(const SizePlan& plan, const FigOptions& opts) {
    return {InclusionMode::draft, {}, plan.rwidth, plan.rheight, opts.file};
}

GlobalInclusion emit_global(std::string_view file, Fidelity fidelity) {
    if (file.empty() && fidelity == Fidelity::lenient)
        throw Error(ErrorCode::empty_path, "global prolog path is empty");
    const std::string f(file);
    return {"ps:plotfile " + f + " global", {"psfig: including " + f + " globally"}};
}

GlobalInclusion init_inclusion(std::string_view prolog, Fidelity fidelity) {
    GlobalInclusion g = emit_global(prolog, fidelity);
    g.logs.insert(g.logs.begin(), "psfiginit");
    return g;
}

std::vector<std::string> log_lines(const LogContext& ctx) {
    std::vector<std::string> out;
    if (ctx.searched)
        out.push_back("psfig: searching " + ctx.file + " for bounding box");
    if (ctx.mode == InclusionMode::full) {
        out.push_back("psfig: including " + ctx.file + ' ');
        if (ctx.clip)
            out.push_back("(clip)");
    }
    return out;
}

} // namespace psfig
