// epsbb.cpp - byte-oriented DSC bounding box scanner

#include "psfig/epsbb.hpp"

#include <fstream>

namespace psfig {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

BoundingBox convert_tokens(const BpTokens& t) {
    return {convert_number(t[0], "bp"), convert_number(t[1], "bp"), convert_number(t[2], "bp"),
            convert_number(t[3], "bp")};
}

} // namespace

BbLine parse_bb_line(std::string_view line) {
    BbLine result;
    if (!line.starts_with(bb_prefix))
        return result;
    line.remove_prefix(bb_prefix.size());

    std::size_t count = 0;
    while (count < 4) {
        while (!line.empty() && is_blank(line.front()))
            line.remove_prefix(1);
        if (line.empty())
            break;
        std::size_t n = 0;
        while (n < line.size() && !is_blank(line[n]))
            ++n;
        result.tokens[count++] = std::string(line.substr(0, n));
        line.remove_prefix(n);
    }
    result.kind = count == 4 ? BbLine::Kind::fields : BbLine::Kind::malformed;
    return result;
}

bool LineReader::next(std::string& line) {
    line.clear();
    auto* buf = in_.rdbuf();
    using traits = std::istream::traits_type;
    auto c = buf->sbumpc();
    if (traits::eq_int_type(c, traits::eof()))
        return false;
    for (; !traits::eq_int_type(c, traits::eof()); c = buf->sbumpc()) {
        const char ch = traits::to_char_type(c);
        if (ch == '\n')
            break;
        if (ch == '\r') {
            if (traits::eq_int_type(buf->sgetc(), traits::to_int_type('\n')))
                buf->sbumpc();
            break;
        }
        line.push_back(ch);
    }
    ++line_number_;
    return true;
}

FoundBox scan_bounding_box(std::istream& in, Fidelity fidelity) {
    if (!in)
        throw Error(ErrorCode::io, "cannot read input stream");
    LineReader reader(in);
    std::string line;
    while (reader.next(line)) {
        BbLine match = parse_bb_line(line);
        if (match.kind == BbLine::Kind::none)
            continue;
        const std::string where = "line " + std::to_string(reader.line_number());
        if (match.kind == BbLine::Kind::malformed) {
            if (fidelity == Fidelity::strict)
                throw Error(ErrorCode::malformed_bb, "malformed %%BoundingBox at " + where + ": '" + line + "'");
            continue;
        }
        try {
            return {convert_tokens(match.tokens), std::move(match.tokens), reader.line_number()};
        } catch (const Error& e) {
            if (fidelity == Fidelity::strict)
                throw Error(ErrorCode::malformed_bb,
                            "malformed %%BoundingBox at " + where + ": " + e.what());
        }
    }
    if (in.bad())
        throw Error(ErrorCode::io, "read error while scanning for bounding box");
    throw Error(ErrorCode::no_bounding_box, std::string(no_bb_message));
}

std::optional<std::filesystem::path> resolve_figure(const std::string& file,
                                                    const std::vector<std::filesystem::path>& dirs) {
    namespace fs = std::filesystem;
    const fs::path p(file);
    std::error_code ec;
    if (p.is_absolute())
        return fs::is_regular_file(p, ec) ? std::optional(p) : std::nullopt;
    for (const auto& dir : dirs) {
        fs::path candidate = dir / p;
        if (fs::is_regular_file(candidate, ec))
            return candidate;
    }
    return std::nullopt;
}

FileScanner filesystem_scanner(Fidelity fidelity, std::vector<std::filesystem::path> dirs) {
    return [fidelity, dirs = std::move(dirs)](const std::string& file) {
        if (file.empty())
            throw Error(ErrorCode::no_bounding_box, std::string(no_bb_message));
        auto path = resolve_figure(file, dirs);
        if (!path)
            throw Error(ErrorCode::io, "cannot find figure file '" + file + "'");
        std::ifstream in(*path, std::ios::binary);
        if (!in)
            throw Error(ErrorCode::io, "cannot open figure file '" + path->string() + "'");
        return scan_bounding_box(in, fidelity);
    };
}

} // namespace psfig
