// texscan.hpp - locate psfig directives in TeX sources, replay them, and
// rewrite them to \includegraphics
//
// Recognized control words: \psfig{...}, \psglobal{...}, \psdraft, \psfull
// and \psfiginit. Text after an unescaped '%' is a comment. Directives inside
// \def/\gdef/\edef/\xdef/\newcommand/\renewcommand bodies are reported as
// warnings and not processed, since a static scan cannot expand macros.

#pragma once

#include "psfig/emitter.hpp"
#include "psfig/epsbb.hpp"
#include "psfig/options.hpp"
#include "psfig/solver.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace psfig {

enum class DirectiveKind { psfig, psdraft, psfull, psglobal, init };

std::string_view to_string(DirectiveKind kind);

struct Directive {
    DirectiveKind kind = DirectiveKind::psfig;
    std::string argument; // verbatim between the outer braces
    std::size_t begin = 0, end = 0; // half-open byte span
    std::size_t line = 1;

    friend bool operator==(const Directive&, const Directive&) = default;
};

struct Diagnostic {
    enum class Severity { warning, error };
    Severity severity = Severity::error;
    std::size_t line = 0;
    std::string message;
    bool io = false; // caused by a missing or unreadable file
};

struct ScanResult {
    std::vector<Directive> directives;
    std::vector<Diagnostic> diagnostics;
};

ScanResult scan_document(std::string_view text);

struct ProcessConfig {
    Fidelity fidelity = Fidelity::lenient;
    std::optional<int> pinned_level; // --draft/--full override
    std::string global_prolog = std::string(default_global_prolog);
};

// One \psfig call, end to end.
struct FigureResult {
    FigOptions options;
    SizePlan sizes;
    InclusionPlan inclusion;
    std::vector<std::string> logs;
};

FigureResult process_figure(std::string_view option_text, int draft_level, const FileScanner& scan,
                            Fidelity fidelity);

struct StateChange {
    int draft_level = full_level;
};

struct SiteResult {
    Directive directive;
    std::variant<std::monostate, FigureResult, StateChange, GlobalInclusion> outcome;
    std::optional<Diagnostic> error;
};

std::vector<SiteResult> process_document(const std::vector<Directive>& directives, DocumentState& state,
                                         const FileScanner& scan, const ProcessConfig& config);

inline constexpr std::string_view migrate_marker = "%[psfig-migrate]";

struct MigrationResult {
    std::string text;
    std::vector<Diagnostic> diagnostics;
    std::size_t changes = 0;
};

struct MigrateOptions {
    bool human = false; // add a pt approximation comment after each rewrite
};

MigrationResult migrate(std::string_view text, const FileScanner& scan, const ProcessConfig& config,
                        DocumentState& state, MigrateOptions options = {});

} // namespace psfig
