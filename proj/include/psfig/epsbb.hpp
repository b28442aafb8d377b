// epsbb.hpp - %%BoundingBox extraction from EPS/PostScript files

#pragma once

#include "psfig/error.hpp"
#include "psfig/texdim.hpp"

#include <array>
#include <filesystem>
#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace psfig {

struct BoundingBox {
    Scaled llx, lly, urx, ury;

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

using BpTokens = std::array<std::string, 4>;

struct BbLine {
    enum class Kind { none, fields, malformed };
    Kind kind = Kind::none;
    BpTokens tokens;
};

inline constexpr std::string_view bb_prefix = "%%BoundingBox:";
inline constexpr std::string_view no_bb_message = "FATAL ERROR: no bb supplied or found";

// Begins-with test on the exact 14-byte prefix, then four blank-separated
// fields. Fewer than four fields is malformed; extra fields are ignored.
BbLine parse_bb_line(std::string_view line);

// Splits a byte stream into lines on LF, CRLF or CR. Never consumes bytes
// past the terminator of the line it returns.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line);
    std::size_t line_number() const noexcept { return line_number_; }

private:
    std::istream& in_;
    std::size_t line_number_ = 0;
};

struct FoundBox {
    BoundingBox box;
    BpTokens tokens;      // raw bp fields as written in the file
    std::size_t line = 0; // 1-based

    friend bool operator==(const FoundBox&, const FoundBox&) = default;
};

// Strict: the first prefix match wins or fails. Lenient: malformed matches
// such as "(atend)" are skipped and the scan continues.
FoundBox scan_bounding_box(std::istream& in, Fidelity fidelity);

// Capability injected into the size solver: resolve a figure name and scan it.
using FileScanner = std::function<FoundBox(const std::string& file)>;

// Relative names are tried against each directory in order; absolute names
// are used as given. Returns nullopt when no candidate exists.
std::optional<std::filesystem::path> resolve_figure(const std::string& file,
                                                    const std::vector<std::filesystem::path>& dirs);

FileScanner filesystem_scanner(Fidelity fidelity, std::vector<std::filesystem::path> dirs);

} // namespace psfig
