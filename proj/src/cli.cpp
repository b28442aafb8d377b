// cli.cpp - subcommands and argument handling

#include "psfig/cli.hpp"

#include "psfig/emitter.hpp"
#include "psfig/epsbb.hpp"
#include "psfig/texscan.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace psfig::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

int exit_code(const Error& e) { return e.is_io() ? exit_io : exit_domain; }

void print_structured(std::ostream& out, const json& record) { out << record.dump(2) << '\n'; }

json bb_json(const BoundingBox& bb) {
    return {{"llx", bb.llx.sp()}, {"lly", bb.lly.sp()}, {"urx", bb.urx.sp()}, {"ury", bb.ury.sp()}};
}

json figure_json(const FigureResult& fig) {
    json j;
    j["mode"] = std::string(to_string(fig.inclusion.mode));
    j["specials"] = fig.inclusion.specials;
    j["width"] = fig.sizes.width.sp();
    j["height"] = fig.sizes.height.sp();
    j["rwidth"] = fig.inclusion.rwidth.sp();
    j["rheight"] = fig.inclusion.rheight.sp();
    j["bb"] = bb_json(fig.sizes.bb);
    j["logs"] = fig.logs;
    if (fig.inclusion.mode == InclusionMode::draft)
        j["label"] = fig.inclusion.label;
    return j;
}

std::optional<int> pinned_level(const RunConfig& cfg) {
    if (!cfg.draft)
        return std::nullopt;
    return *cfg.draft ? draft_level_value : full_level;
}

ProcessConfig process_config(const RunConfig& cfg) {
    return {cfg.mode, pinned_level(cfg), cfg.global_prolog.empty() ? std::string(default_global_prolog) : cfg.global_prolog};
}

std::vector<fs::path> figure_dirs(const fs::path& first, const RunConfig& cfg) {
    std::vector<fs::path> dirs{first.empty() ? fs::path(".") : first};
    dirs.insert(dirs.end(), cfg.search_paths.begin(), cfg.search_paths.end());
    return dirs;
}

std::optional<std::string> read_file(const fs::path& p, std::ostream& err) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        err << "psfig: cannot read '" << p.string() << "'\n";
        return std::nullopt;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool write_file(const fs::path& p, const std::string& text, std::ostream& err) {
    std::ofstream outf(p, std::ios::binary | std::ios::trunc);
    outf << text;
    if (!outf) {
        err << "psfig: cannot write '" << p.string() << "'\n";
        return false;
    }
    return true;
}

std::string_view severity_name(Diagnostic::Severity s) {
    return s == Diagnostic::Severity::error ? "error" : "warning";
}

void banner(const RunConfig& cfg, std::ostream& err) {
    if (cfg.verbose)
        err << version_banner << '\n';
}

void print_logs(const RunConfig& cfg, const std::vector<std::string>& logs, std::ostream& err) {
    if (cfg.verbose)
        for (const auto& line : logs)
            err << line << '\n';
}

} // namespace

int cmd_bbox(const fs::path& file, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    banner(cfg, err);
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        err << "psfig: cannot open '" << file.string() << "'\n";
        return exit_io;
    }
    try {
        print_logs(cfg, {"psfig: searching " + file.string() + " for bounding box"}, err);
        const FoundBox found = scan_bounding_box(in, cfg.mode);
        const auto& t = found.tokens;
        if (cfg.output_format == OutputFormat::structured) {
            json j;
            j["file"] = file.string();
            j["line"] = found.line;
            j["bp"] = t;
            j["sp"] = bb_json(found.box);
            print_structured(out, j);
        } else {
            const auto& b = found.box;
            out << "bp: " << t[0] << ' ' << t[1] << ' ' << t[2] << ' ' << t[3] << " / sp: " << format_sp(b.llx) << ' '
                << format_sp(b.lly) << ' ' << format_sp(b.urx) << ' ' << format_sp(b.ury) << '\n';
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "psfig: " << e.what() << '\n';
        return exit_code(e);
    }
}

int cmd_plan(const std::string& options, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    banner(cfg, err);
    try {
        const int level = pinned_level(cfg).value_or(full_level);
        const FigureResult fig =
            process_figure(options, level, filesystem_scanner(cfg.mode, figure_dirs({}, cfg)), cfg.mode);
        print_logs(cfg, fig.logs, err);
        if (cfg.output_format == OutputFormat::structured) {
            print_structured(out, figure_json(fig));
            return exit_ok;
        }
        for (const auto& s : fig.inclusion.specials)
            out << s << '\n';
        if (fig.inclusion.mode == InclusionMode::draft)
            out << "draft: " << fig.inclusion.label << '\n';
        out << "reserved: " << format_sp(fig.inclusion.rwidth) << ' ' << format_sp(fig.inclusion.rheight) << '\n';
        return exit_ok;
    } catch (const Error& e) {
        err << "psfig: " << e.what() << '\n';
        return exit_code(e);
    }
}

int cmd_scan(const std::vector<fs::path>& files, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    banner(cfg, err);
    const ProcessConfig pc = process_config(cfg);
    DocumentState state;
    std::size_t n_full = 0, n_draft = 0, n_state = 0, n_global = 0, n_errors = 0, n_warnings = 0, n_sites = 0;
    bool io_error = false;
    json records = json::array();

    for (const auto& file : files) {
        const auto text = read_file(file, err);
        if (!text) {
            io_error = true;
            ++n_errors;
            continue;
        }
        const std::string name = file.string();
        ScanResult scanned = scan_document(*text);
        const auto sites =
            process_document(scanned.directives, state, filesystem_scanner(cfg.mode, figure_dirs(file.parent_path(), cfg)), pc);

        for (const auto& diag : scanned.diagnostics) {
            (diag.severity == Diagnostic::Severity::error ? n_errors : n_warnings)++;
            if (cfg.output_format == OutputFormat::structured)
                records.push_back({{"file", name}, {"line", diag.line}, {"severity", severity_name(diag.severity)},
                                   {"message", diag.message}});
            else
                out << name << ':' << diag.line << ": " << severity_name(diag.severity) << ": " << diag.message << '\n';
        }

        for (const auto& site : sites) {
            ++n_sites;
            const Directive& d = site.directive;
            json rec{{"file", name}, {"line", d.line}, {"directive", std::string(to_string(d.kind))}};
            std::ostringstream line;
            line << name << ':' << d.line << ": \\" << to_string(d.kind);
            if (d.kind == DirectiveKind::psfig || d.kind == DirectiveKind::psglobal) {
                line << '{' << d.argument << '}';
                rec["argument"] = d.argument;
            }

            if (site.error) {
                ++n_errors;
                io_error = io_error || site.error->io;
                line << " error: " << site.error->message;
                rec["error"] = site.error->message;
            } else if (const auto* fig = std::get_if<FigureResult>(&site.outcome)) {
                (fig->inclusion.mode == InclusionMode::full ? n_full : n_draft)++;
                print_logs(cfg, fig->logs, err);
                line << ' ' << to_string(fig->inclusion.mode) << " reserved " << format_sp(fig->inclusion.rwidth) << ' '
                     << format_sp(fig->inclusion.rheight);
                if (fig->inclusion.mode == InclusionMode::draft)
                    line << " label " << fig->inclusion.label;
                for (const auto& s : fig->inclusion.specials)
                    line << "\n  " << s;
                rec["plan"] = figure_json(*fig);
            } else if (const auto* change = std::get_if<StateChange>(&site.outcome)) {
                ++n_state;
                line << " draft level " << change->draft_level;
                if (pc.pinned_level)
                    line << " (overridden: level " << *pc.pinned_level << ')';
                rec["draft_level"] = change->draft_level;
            } else if (const auto* g = std::get_if<GlobalInclusion>(&site.outcome)) {
                ++n_global;
                print_logs(cfg, g->logs, err);
                line << "\n  " << g->special;
                rec["special"] = g->special;
            }
            if (cfg.output_format == OutputFormat::structured)
                records.push_back(std::move(rec));
            else
                out << line.str() << '\n';
        }
    }

    if (cfg.output_format == OutputFormat::structured) {
        json j;
        j["sites"] = std::move(records);
        j["summary"] = {{"directives", n_sites}, {"full", n_full}, {"draft", n_draft}, {"state_changes", n_state},
                        {"global", n_global}, {"errors", n_errors}, {"warnings", n_warnings}};
        print_structured(out, j);
    } else {
        out << "summary: " << n_sites << " directives, " << n_full << " full, " << n_draft << " draft, " << n_state
            << " state changes, " << n_global << " global, " << n_errors << " errors, " << n_warnings << " warnings\n";
    }
    if (io_error)
        return exit_io;
    return n_errors > 0 ? exit_domain : exit_ok;
}

int cmd_migrate(const std::vector<fs::path>& files, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    banner(cfg, err);
    if (cfg.in_place && cfg.no_backup && !cfg.force) {
        err << "psfig: refusing to rewrite in place without a backup (use --force)\n";
        return exit_io;
    }
    const ProcessConfig pc = process_config(cfg);
    DocumentState state;
    bool io_error = false, domain_error = false;

    for (const auto& file : files) {
        const auto text = read_file(file, err);
        if (!text) {
            io_error = true;
            continue;
        }
        const MigrationResult m = migrate(*text, filesystem_scanner(cfg.mode, figure_dirs(file.parent_path(), cfg)),
                                          pc, state, {cfg.human});

        fs::path target = file;
        if (cfg.in_place) {
            if (!cfg.no_backup) {
                fs::path backup = file;
                backup += ".bak";
                std::error_code ec;
                if (fs::exists(backup, ec) && !cfg.force) {
                    err << "psfig: backup '" << backup.string() << "' already exists (use --force)\n";
                    io_error = true;
                    continue;
                }
                if (!write_file(backup, *text, err)) {
                    io_error = true;
                    continue;
                }
            }
        } else {
            target = file.parent_path() / (file.stem().string() + ".migrated" + file.extension().string());
        }
        if (!write_file(target, m.text, err)) {
            io_error = true;
            continue;
        }

        json diags = json::array();
        for (const auto& d : m.diagnostics) {
            domain_error = domain_error || (d.severity == Diagnostic::Severity::error && !d.io);
            io_error = io_error || d.io;
            if (cfg.output_format == OutputFormat::structured)
                diags.push_back({{"line", d.line}, {"severity", severity_name(d.severity)}, {"message", d.message}});
            else
                out << file.string() << ':' << d.line << ": " << severity_name(d.severity) << ": " << d.message << '\n';
        }
        if (cfg.output_format == OutputFormat::structured) {
            json j;
            j["file"] = file.string();
            j["output"] = target.string();
            j["changes"] = m.changes;
            j["diagnostics"] = std::move(diags);
            print_structured(out, j);
        } else {
            out << file.string() << " -> " << target.string() << ": " << m.changes << " changes\n";
        }
    }
    if (io_error)
        return exit_io;
    return domain_error ? exit_domain : exit_ok;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"psfig figure-inclusion engine: bounding boxes, geometry, specials and migration", "psfig"};
    app.require_subcommand(1);

    RunConfig cfg;
    bool strict = false, draft = false, full = false;
    std::string format = "text";
    std::string prolog;
    std::vector<std::string> search;

    app.add_flag("--strict", strict, "Reproduce the original first-match-or-die behavior");
    auto* draft_flag = app.add_flag("--draft", draft, "Force draft placeholders for every figure");
    auto* full_flag = app.add_flag("--full", full, "Force full inclusion for every figure");
    draft_flag->excludes(full_flag);
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    app.add_option("--global-prolog", prolog, std::string("Global prolog path (default ") +
                                                  std::string(default_global_prolog) + ", env " + prolog_env_var + ")");
    app.add_option("--search-path", search, "Extra directory for figure files (repeatable)")->allow_extra_args(false);
    app.add_flag("--in-place", cfg.in_place, "migrate: rewrite the input, keeping a .bak backup");
    app.add_flag("--no-backup", cfg.no_backup, "migrate: skip the backup (requires --force)");
    app.add_flag("--force", cfg.force, "migrate: overwrite an existing backup");
    app.add_flag("--human", cfg.human, "migrate: append a pt approximation comment");
    app.add_flag("--verbose", cfg.verbose, "Print the banner and log lines on stderr");

    std::string bbox_file, plan_options;
    std::vector<std::string> scan_files, migrate_files;
    auto* bbox = app.add_subcommand("bbox", "Print the %%BoundingBox of an EPS file");
    bbox->add_option("file", bbox_file)->required();
    auto* plan = app.add_subcommand("plan", "Plan one \\psfig call");
    plan->add_option("options", plan_options)->required();
    auto* scan = app.add_subcommand("scan", "List psfig directives in TeX files");
    scan->add_option("texfiles", scan_files)->required();
    auto* mig = app.add_subcommand("migrate", "Rewrite \\psfig calls as \\includegraphics");
    mig->add_option("texfiles", migrate_files)->required();
    for (auto* sub : {bbox, plan, scan, mig})
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_domain;
    }

    cfg.mode = strict ? Fidelity::strict : Fidelity::lenient;
    if (draft)
        cfg.draft = true;
    else if (full)
        cfg.draft = false;
    cfg.output_format = format == "structured" ? OutputFormat::structured : OutputFormat::text;
    if (!prolog.empty())
        cfg.global_prolog = prolog;
    else if (const char* env = std::getenv(prolog_env_var))
        cfg.global_prolog = env;
    else
        cfg.global_prolog = std::string(default_global_prolog);
    cfg.search_paths.assign(search.begin(), search.end());

    if (*bbox)
        return cmd_bbox(bbox_file, cfg, out, err);
    if (*plan)
        return cmd_plan(plan_options, cfg, out, err);
    std::vector<fs::path> paths;
    for (const auto& f : *scan ? scan_files : migrate_files)
        paths.emplace_back(f);
    return *scan ? cmd_scan(paths, cfg, out, err) : cmd_migrate(paths, cfg, out, err);
}

} // namespace psfig::cli
