// texscan.cpp

#include "psfig/texscan.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

namespace psfig {

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_blank(char c) { return c == ' ' || c == '\t'; }

class LineIndex {
public:
    explicit LineIndex(std::string_view text) {
        starts_.push_back(0);
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\n' || (text[i] == '\r' && (i + 1 == text.size() || text[i + 1] != '\n')))
                starts_.push_back(i + 1);
        }
    }

    std::size_t line_of(std::size_t offset) const {
        return static_cast<std::size_t>(std::upper_bound(starts_.begin(), starts_.end(), offset) - starts_.begin());
    }

private:
    std::vector<std::size_t> starts_;
};

// Position one past the '}' matching the '{' at open, or npos.
std::size_t match_brace(std::string_view text, std::size_t open) {
    int depth = 0;
    for (std::size_t k = open; k < text.size(); ++k) {
        const char c = text[k];
        if (c == '\\') {
            ++k;
        } else if (c == '{') {
            ++depth;
        } else if (c == '}') {
            if (--depth == 0)
                return k + 1;
        }
    }
    return std::string_view::npos;
}

std::size_t skip_space(std::string_view text, std::size_t k) {
    while (k < text.size() && (is_blank(text[k]) || text[k] == '\n' || text[k] == '\r'))
        ++k;
    return k;
}

// End of the body of a definition starting after the defining control word,
// or npos when no body can be found.
std::size_t definition_body_end(std::string_view text, std::size_t k, bool latex_style) {
    if (latex_style) {
        k = skip_space(text, k);
        if (k < text.size() && text[k] == '{') {
            k = match_brace(text, k);
            if (k == std::string_view::npos)
                return k;
        }
        k = skip_space(text, k);
        while (k < text.size() && text[k] == '[') {
            const std::size_t close = text.find(']', k);
            if (close == std::string_view::npos)
                return close;
            k = skip_space(text, close + 1);
        }
    }
    for (; k < text.size(); ++k) {
        if (text[k] == '\\')
            ++k;
        else if (text[k] == '{')
            return match_brace(text, k);
    }
    return std::string_view::npos;
}

} // namespace

std::string_view to_string(DirectiveKind kind) {
    switch (kind) {
    case DirectiveKind::psfig: return "psfig";
    case DirectiveKind::psdraft: return "psdraft";
    case DirectiveKind::psfull: return "psfull";
    case DirectiveKind::psglobal: return "psglobal";
    case DirectiveKind::init: return "psfiginit";
    }
    return "?";
}

ScanResult scan_document(std::string_view text) {
    ScanResult out;
    const LineIndex lines(text);
    std::size_t def_end = 0; // inside a definition body while i < def_end

    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (c == '%') {
            while (i < text.size() && text[i] != '\n' && text[i] != '\r')
                ++i;
            continue;
        }
        if (c != '\\') {
            ++i;
            continue;
        }
        std::size_t j = i + 1;
        while (j < text.size() && is_letter(text[j]))
            ++j;
        if (j == i + 1) {
            i += 2; // control symbol such as \% or \{
            continue;
        }
        const std::string_view name = text.substr(i + 1, j - i - 1);
        const std::size_t line = lines.line_of(i);

        if (name == "def" || name == "gdef" || name == "edef" || name == "xdef" || name == "newcommand" ||
            name == "renewcommand") {
            const std::size_t body_end = definition_body_end(text, j, name.ends_with("command"));
            if (body_end != std::string_view::npos)
                def_end = std::max(def_end, body_end);
            i = j;
            continue;
        }

        std::optional<DirectiveKind> kind;
        if (name == "psfig") kind = DirectiveKind::psfig;
        else if (name == "psglobal") kind = DirectiveKind::psglobal;
        else if (name == "psdraft") kind = DirectiveKind::psdraft;
        else if (name == "psfull") kind = DirectiveKind::psfull;
        else if (name == "psfiginit") kind = DirectiveKind::init;
        if (!kind) {
            i = j;
            continue;
        }

        if (i < def_end) {
            out.diagnostics.push_back({Diagnostic::Severity::warning, line,
                                       "\\" + std::string(name) +
                                           " inside a macro definition is not processed"});
            i = j;
            continue;
        }

        Directive d{*kind, {}, i, j, line};
        if (*kind == DirectiveKind::psfig || *kind == DirectiveKind::psglobal) {
            const std::size_t open = skip_space(text, j);
            if (open >= text.size() || text[open] != '{') {
                out.diagnostics.push_back({Diagnostic::Severity::error, line,
                                           "expected '{' after \\" + std::string(name)});
                i = j;
                continue;
            }
            const std::size_t close = match_brace(text, open);
            if (close == std::string_view::npos) {
                out.diagnostics.push_back({Diagnostic::Severity::error, line,
                                           "unbalanced braces after \\" + std::string(name)});
                i = j;
                continue;
            }
            d.argument = std::string(text.substr(open + 1, close - open - 2));
            d.end = close;
        }

        i = d.end;
        out.directives.push_back(std::move(d));
    }
    return out;
}

FigureResult process_figure(std::string_view option_text, int draft_level, const FileScanner& scan,
                            Fidelity fidelity) {
    FigureResult r;
    r.options = parse_options(option_text);
    r.sizes = plan_sizes(r.options, scan, fidelity);
    const InclusionMode mode = decide_mode(r.options.cost, draft_level);
    r.inclusion = mode == InclusionMode::full ? emit_full(r.sizes, r.options) : emit_draft_box(r.sizes, r.options);
    r.logs = log_lines({mode, r.options.file, r.options.clip, r.sizes.searched});
    return r;
}

std::vector<SiteResult> process_document(const std::vector<Directive>& directives, DocumentState& state,
                                         const FileScanner& scan, const ProcessConfig& config) {
    std::vector<SiteResult> out;
    out.reserve(directives.size());
    for (const auto& d : directives) {
        SiteResult site{d, std::monostate{}, std::nullopt};
        try {
            switch (d.kind) {
            case DirectiveKind::psdraft:
                state.draft_level = draft_level_value;
                site.outcome = StateChange{state.draft_level};
                break;
            case DirectiveKind::psfull:
                state.draft_level = full_level;
                site.outcome = StateChange{state.draft_level};
                break;
            case DirectiveKind::psglobal: {
                GlobalInclusion g = emit_global(d.argument, config.fidelity);
                state.global_prologs.push_back(d.argument);
                site.outcome = std::move(g);
                break;
            }
            case DirectiveKind::init: {
                GlobalInclusion g = init_inclusion(config.global_prolog, config.fidelity);
                state.global_prologs.push_back(config.global_prolog);
                site.outcome = std::move(g);
                break;
            }
            case DirectiveKind::psfig:
                site.outcome = process_figure(d.argument, config.pinned_level.value_or(state.draft_level), scan,
                                              config.fidelity);
                break;
            }
        } catch (const Error& e) {
            site.error = Diagnostic{Diagnostic::Severity::error, d.line, e.what(), e.is_io()};
        }
        out.push_back(std::move(site));
    }
    return out;
}

namespace {

const std::string draft_marker_line = std::string(migrate_marker) + " draft-mode figure left unchanged\n";

bool rest_of_line_blank(std::string_view text, std::size_t pos) {
    for (; pos < text.size(); ++pos) {
        if (text[pos] == '\n' || text[pos] == '\r')
            return true;
        if (!is_blank(text[pos]))
            return false;
    }
    return true;
}

std::string single_line(std::string_view s) {
    std::string out(s);
    std::replace(out.begin(), out.end(), '\n', ' ');
    std::replace(out.begin(), out.end(), '\r', ' ');
    return out;
}

// A comment that ends the line without changing what TeX sees after it.
std::string comment_out(std::string_view text, const Directive& d, std::string_view note) {
    std::string out = std::string(migrate_marker) + ' ' + single_line(text.substr(d.begin, d.end - d.begin)) + ": " +
                      std::string(note);
    if (!rest_of_line_blank(text, d.end))
        out += '\n';
    return out;
}

std::string pt_approx(Scaled v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fpt", static_cast<double>(v.sp()) / unity);
    return buf;
}

} // namespace

MigrationResult migrate(std::string_view text, const FileScanner& scan, const ProcessConfig& config,
                        DocumentState& state, MigrateOptions options) {
    MigrationResult result;
    ScanResult scanned = scan_document(text);
    result.diagnostics = std::move(scanned.diagnostics);

    std::string& out = result.text;
    out.reserve(text.size());
    std::size_t copied = 0;
    auto splice = [&](const Directive& d, std::string_view replacement) {
        out.append(text.substr(copied, d.begin - copied));
        out.append(replacement);
        copied = d.end;
        ++result.changes;
    };
    auto note = [&](Diagnostic::Severity severity, const Directive& d, std::string message) {
        result.diagnostics.push_back({severity, d.line, std::move(message)});
    };

    for (const auto& d : scanned.directives) {
        switch (d.kind) {
        case DirectiveKind::psdraft:
            state.draft_level = draft_level_value;
            splice(d, comment_out(text, d, "draft toggle has no \\includegraphics equivalent"));
            break;
        case DirectiveKind::psfull:
            state.draft_level = full_level;
            splice(d, comment_out(text, d, "draft toggle has no \\includegraphics equivalent"));
            break;
        case DirectiveKind::psglobal:
            state.global_prologs.push_back(d.argument);
            splice(d, comment_out(text, d, "global PostScript prolog is not needed by graphicx"));
            break;
        case DirectiveKind::init:
            state.global_prologs.push_back(config.global_prolog);
            splice(d, comment_out(text, d, "global PostScript prolog is not needed by graphicx"));
            break;
        case DirectiveKind::psfig: {
            if (text.substr(0, d.begin).ends_with(draft_marker_line))
                break;
            FigureResult fig;
            try {
                fig = process_figure(d.argument, config.pinned_level.value_or(state.draft_level), scan,
                                     config.fidelity);
            } catch (const Error& e) {
                result.diagnostics.push_back(
                    {Diagnostic::Severity::error, d.line, std::string("left unchanged: ") + e.what(), e.is_io()});
                break;
            }
            if (fig.inclusion.mode == InclusionMode::draft) {
                Directive at_start = d;
                at_start.end = d.begin;
                splice(at_start, draft_marker_line);
                note(Diagnostic::Severity::warning, d, "draft-mode figure left unchanged");
                break;
            }
            const FigOptions& o = fig.options;
            if (o.rwidth || o.rheight)
                note(Diagnostic::Severity::warning, d, "rwidth/rheight dropped: no \\includegraphics equivalent");
            if (o.prolog || o.postlog)
                note(Diagnostic::Severity::warning, d, "prolog/postlog dropped: no \\includegraphics equivalent");

            std::string call = "\\includegraphics[width=" + format_sp(fig.sizes.width) +
                               "sp,height=" + format_sp(fig.sizes.height) + "sp";
            if (o.clip)
                call += ",clip";
            call += "]{" + o.file + "}";
            if (options.human) {
                call += "% " + pt_approx(fig.sizes.width) + " x " + pt_approx(fig.sizes.height);
                if (!rest_of_line_blank(text, d.end))
                    call += '\n';
            }
            splice(d, call);
            break;
        }
        }
    }
    out.append(text.substr(copied));
    return result;
}

} // namespace psfig
