// cli.hpp - the psfig command-line front end
//
//   psfig bbox <file>
//   psfig plan <option-string>
//   psfig scan <texfile>...
//   psfig migrate <texfile>...
//
// Exit codes: 0 success, 1 domain error, 2 I/O error.

#pragma once

#include "psfig/error.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace psfig::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain = 1;
inline constexpr int exit_io = 2;

inline constexpr const char* prolog_env_var = "PSFIG_GLOBAL_PROLOG";

enum class OutputFormat { text, structured };

struct RunConfig {
    Fidelity mode = Fidelity::lenient;
    std::optional<bool> draft; // true: --draft, false: --full
    std::string global_prolog;
    OutputFormat output_format = OutputFormat::text;
    std::vector<std::filesystem::path> search_paths;
    bool verbose = false;
    bool in_place = false;
    bool force = false;
    bool no_backup = false;
    bool human = false;
};

int cmd_bbox(const std::filesystem::path& file, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_plan(const std::string& options, const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_scan(const std::vector<std::filesystem::path>& files, const RunConfig& cfg, std::ostream& out,
             std::ostream& err);
int cmd_migrate(const std::vector<std::filesystem::path>& files, const RunConfig& cfg, std::ostream& out,
                std::ostream& err);

// Full argument parsing and dispatch; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace psfig::cli
