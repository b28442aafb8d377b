// emitter.hpp - special strings, draft placeholders and log lines
//
// A full inclusion is bracketed by the startTexFig/endTexFig specials:
//
//   ps::[begin] W H LLX LLY URX URY startTexFig 
//   ps:: LLX LLY URX URY doclip                   (clip only)
//   ps: plotfile PROLOG                           (prolog only)
//   ps: plotfile FILE 
//   ps: plotfile POSTLOG                          (postlog only)
//   ps::[end] endTexFig 
//
// Every special ends with exactly one space. The global form has no space
// after "ps:" and no trailing space: "ps:plotfile FILE global".

#pragma once

#include "psfig/error.hpp"
#include "psfig/options.hpp"
#include "psfig/solver.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace psfig {

inline constexpr std::string_view version_banner = "psfig: version 1.1";
inline constexpr std::string_view default_global_prolog = "/usr/lib/ps/figtex.pro";
inline constexpr int full_level = 100;
inline constexpr int draft_level_value = 0;

enum class InclusionMode { full, draft };

std::string_view to_string(InclusionMode mode);

struct InclusionPlan {
    InclusionMode mode = InclusionMode::full;
    std::vector<std::string> specials; // empty for draft
    Scaled rwidth, rheight;
    std::string label; // draft only: the file name, centered in the box

    friend bool operator==(const InclusionPlan&, const InclusionPlan&) = default;
};

struct DocumentState {
    int draft_level = full_level; // \psfull runs at load time
    std::vector<std::string> global_prologs;
};

InclusionMode decide_mode(int cost, int draft_level);

std::vector<std::string> emit_specials(const SizePlan& plan, const FigOptions& opts);

InclusionPlan emit_full(const SizePlan& plan, const FigOptions& opts);

InclusionPlan emit_draft_box(const SizePlan& plan, const FigOptions& opts);

struct GlobalInclusion {
    std::string special;
    std::vector<std::string> logs;
};

// Lenient mode rejects an empty path.
GlobalInclusion emit_global(std::string_view file, Fidelity fidelity);

// The init sequence: announce itself, then include the prolog globally.
GlobalInclusion init_inclusion(std::string_view prolog, Fidelity fidelity);

struct LogContext {
    InclusionMode mode = InclusionMode::full;
    std::string file;
    bool clip = false;
    bool searched = false;
};

std::vector<std::string> log_lines(const LogContext& ctx);

} // namespace psfig
