#include "doctest.h"

#include "psfig/texscan.hpp"

#include <map>
#include <sstream>

using namespace psfig;

namespace {

struct MemoryFiles {
    std::map<std::string, std::string> files{{"a.ps", "%%BoundingBox: 0 0 72 144\n"},
                                             {"b.ps", "%%BoundingBox: 0 0 72 72\n"}};

    FileScanner scanner() {
        return [this](const std::string& name) {
            auto it = files.find(name);
            if (it == files.end())
                throw Error(ErrorCode::io, "cannot find figure file '" + name + "'");
            std::istringstream in(it->second);
            return scan_bounding_box(in, Fidelity::lenient);
        };
    }
};

std::vector<DirectiveKind> kinds(const ScanResult& r) {
    std::vector<DirectiveKind> out;
    for (const auto& d : r.directives)
        out.push_back(d.kind);
    return out;
}

std::vector<InclusionMode> modes(const std::vector<SiteResult>& sites) {
    std::vector<InclusionMode> out;
    for (const auto& s : sites)
        if (const auto* f = std::get_if<FigureResult>(&s.outcome))
            out.push_back(f->inclusion.mode);
    return out;
}

} // namespace

TEST_CASE("scan a single psfig") {
    const ScanResult r = scan_document("\\psfig{file=a.ps}");
    REQUIRE(r.directives.size() == 1);
    const Directive& d = r.directives[0];
    CHECK(d.kind == DirectiveKind::psfig);
    CHECK(d.argument == "file=a.ps");
    CHECK(d.begin == 0);
    CHECK(d.end == 17);
    CHECK(d.line == 1);
}

TEST_CASE("comments hide directives") {
    CHECK(scan_document("% \\psfig{file=a.ps}").directives.empty());
    CHECK(scan_document("text % \\psdraft\n\\psfull").directives.size() == 1);
    // an escaped percent does not start a comment
    CHECK(scan_document("50\\% \\psdraft").directives.size() == 1);
    // \\ followed by % is a line break then a comment
    CHECK(scan_document("a\\\\% \\psdraft").directives.empty());
}

TEST_CASE("order and kinds") {
    const ScanResult r = scan_document("\\psdraft X \\psfig{file=a.ps} \\psfull\n\\psglobal{g.pro}\\psfiginit");
    CHECK(kinds(r) == std::vector<DirectiveKind>{DirectiveKind::psdraft, DirectiveKind::psfig, DirectiveKind::psfull,
                                                 DirectiveKind::psglobal, DirectiveKind::init});
    CHECK(r.directives[3].argument == "g.pro");
    CHECK(r.directives[3].line == 2);
    for (std::size_t i = 1; i < r.directives.size(); ++i)
        CHECK(r.directives[i - 1].end <= r.directives[i].begin);
}

TEST_CASE("control words must match exactly") {
    CHECK(scan_document("\\psfigure{x} \\psdrafts \\psfullx").directives.empty());
}

TEST_CASE("nested braces and spaces before the argument") {
    const ScanResult r = scan_document("\\psfig {file={a}.ps,height=1in}");
    REQUIRE(r.directives.size() == 1);
    CHECK(r.directives[0].argument == "file={a}.ps,height=1in");
}

TEST_CASE("unbalanced braces are diagnosed") {
    const ScanResult r = scan_document("line one\n\\psfig{file=a.ps\n\\psdraft");
    REQUIRE_FALSE(r.diagnostics.empty());
    CHECK(r.diagnostics[0].severity == Diagnostic::Severity::error);
    CHECK(r.diagnostics[0].line == 2);
    CHECK(kinds(r) == std::vector<DirectiveKind>{DirectiveKind::psdraft});
    CHECK(scan_document("\\psfig file").diagnostics.size() == 1);
}

TEST_CASE("directives inside definitions are flagged") {
    const ScanResult r = scan_document("\\def\\fig#1{\\psfig{file=#1}}\n\\newcommand{\\f}[1]{\\psdraft}\\psfull");
    CHECK(kinds(r) == std::vector<DirectiveKind>{DirectiveKind::psfull});
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].severity == Diagnostic::Severity::warning);
    CHECK(r.diagnostics[1].line == 2);
}

TEST_CASE("process_document state replay") {
    MemoryFiles mem;
    const ProcessConfig cfg;
    auto run = [&](std::string_view text) {
        DocumentState st;
        return modes(process_document(scan_document(text).directives, st, mem.scanner(), cfg));
    };
    using M = InclusionMode;
    CHECK(run("\\psfig{file=a.ps}") == std::vector<M>{M::full});
    CHECK(run("\\psdraft\\psfig{file=a.ps}") == std::vector<M>{M::draft});
    CHECK(run("\\psdraft\\psfull\\psfig{file=a.ps}") == std::vector<M>{M::full});
    CHECK(run("\\psdraft\\psfig{file=a.ps,cost=-1}") == std::vector<M>{M::full});
    CHECK(run("\\psfig{file=a.ps,cost=100}") == std::vector<M>{M::draft});
}

TEST_CASE("pinned level overrides toggles") {
    MemoryFiles mem;
    ProcessConfig cfg;
    cfg.pinned_level = draft_level_value;
    DocumentState st;
    const auto sites =
        process_document(scan_document("\\psfull\\psfig{file=a.ps}").directives, st, mem.scanner(), cfg);
    CHECK(modes(sites) == std::vector<InclusionMode>{InclusionMode::draft});
    CHECK(st.draft_level == full_level);
}

TEST_CASE("errors are collected per site") {
    MemoryFiles mem;
    DocumentState st;
    const auto sites = process_document(
        scan_document("\\psfig{file=missing.ps}\n\\psfig{bogus=1}\n\\psfig{file=b.ps}").directives, st,
        mem.scanner(), {});
    REQUIRE(sites.size() == 3);
    REQUIRE(sites[0].error);
    CHECK(sites[0].error->io);
    CHECK(sites[0].error->line == 1);
    REQUIRE(sites[1].error);
    CHECK_FALSE(sites[1].error->io);
    CHECK(sites[1].error->message.find("unknown key 'bogus'") != std::string::npos);
    CHECK_FALSE(sites[2].error);
}

TEST_CASE("globals accumulate") {
    MemoryFiles mem;
    DocumentState st;
    ProcessConfig cfg;
    cfg.global_prolog = "my.pro";
    const auto sites = process_document(scan_document("\\psfiginit\\psglobal{x.pro}").directives, st, mem.scanner(), cfg);
    CHECK(st.global_prologs == std::vector<std::string>{"my.pro", "x.pro"});
    CHECK(std::get<GlobalInclusion>(sites[1].outcome).special == "ps:plotfile x.pro global");
}

TEST_CASE("property: processing a concatenation equals threading state") {
    MemoryFiles mem;
    const std::string parts[] = {"\\psfig{file=a.ps} \\psdraft ", "\\psfig{file=b.ps}\\psfull\\psfig{file=a.ps}",
                                 " \\psdraft\\psfig{file=b.ps,cost=0}"};
    std::string whole;
    DocumentState threaded;
    std::vector<InclusionMode> piecewise;
    for (const auto& p : parts) {
        whole += p;
        const auto m = modes(process_document(scan_document(p).directives, threaded, mem.scanner(), {}));
        piecewise.insert(piecewise.end(), m.begin(), m.end());
    }
    DocumentState fresh;
    CHECK(modes(process_document(scan_document(whole).directives, fresh, mem.scanner(), {})) == piecewise);
    CHECK(fresh.draft_level == threaded.draft_level);
}

TEST_CASE("migrate rewrites") {
    MemoryFiles mem;
    DocumentState st;
    auto m = migrate("\\psfig{file=a.ps,height=36pt}", mem.scanner(), {}, st);
    CHECK(m.text == "\\includegraphics[width=1156044sp,height=2359296sp]{a.ps}");
    CHECK(m.changes == 1);

    DocumentState st2;
    m = migrate("\\psfig{file=b.ps,clip=}", mem.scanner(), {}, st2);
    CHECK(m.text == "\\includegraphics[width=4736286sp,height=4736286sp,clip]{b.ps}");
}

TEST_CASE("migrate leaves plain text alone") {
    MemoryFiles mem;
    DocumentState st;
    const std::string text = "\\documentclass{article}\n% \\psfig{file=a.ps}\nHello.\r\n";
    const auto m = migrate(text, mem.scanner(), {}, st);
    CHECK(m.text == text);
    CHECK(m.changes == 0);
}

TEST_CASE("migrate comments out toggles and marks draft figures") {
    MemoryFiles mem;
    DocumentState st;
    const std::string text = "\\psdraft\nA \\psfig{file=a.ps} B\n\\psfull C\n\\psfig{file=b.ps}\n";
    const auto m = migrate(text, mem.scanner(), {}, st);
    const std::string expected =
        "%[psfig-migrate] \\psdraft: draft toggle has no \\includegraphics equivalent\n"
        "A %[psfig-migrate] draft-mode figure left unchanged\n\\psfig{file=a.ps} B\n"
        "%[psfig-migrate] \\psfull: draft toggle has no \\includegraphics equivalent\n C\n"
        "\\includegraphics[width=4736286sp,height=4736286sp]{b.ps}\n";
    CHECK(m.text == expected);
    CHECK(m.changes == 4);

    DocumentState again;
    const auto second = migrate(m.text, mem.scanner(), {}, again);
    CHECK(second.text == m.text);
    CHECK(second.changes == 0);
}

TEST_CASE("migrate drops reserved sizes with a diagnostic and keeps failures") {
    MemoryFiles mem;
    DocumentState st;
    const auto m = migrate("\\psfig{file=b.ps,rwidth=1in}\\psfig{file=nope.ps}", mem.scanner(), {}, st);
    CHECK(m.text == "\\includegraphics[width=4736286sp,height=4736286sp]{b.ps}\\psfig{file=nope.ps}");
    REQUIRE(m.diagnostics.size() == 2);
    CHECK(m.diagnostics[0].severity == Diagnostic::Severity::warning);
    CHECK(m.diagnostics[1].severity == Diagnostic::Severity::error);
    CHECK(m.diagnostics[1].io);
}

TEST_CASE("migrate --human") {
    MemoryFiles mem;
    DocumentState st;
    const auto m = migrate("x \\psfig{file=b.ps} y", mem.scanner(), {}, st, {true});
    CHECK(m.text == "x \\includegraphics[width=4736286sp,height=4736286sp]{b.ps}% 72.27pt x 72.27pt\n y");
}
