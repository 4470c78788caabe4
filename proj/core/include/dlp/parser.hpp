#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "dlp/program.hpp"

namespace dlp {

/// Parses the textual program format. Throws SyntaxError; rule arguments
/// that look like variables (leading uppercase letter or `_`) are rejected.
ProgramSource parse_source(std::string_view text);

/// parse_source followed by DlProgram::build.
DlProgram parse_program(std::string_view text, Limits limits = {});

/// Reads and parses a file. Throws Error when the file cannot be read.
DlProgram load_program(const std::filesystem::path& path, Limits limits = {});

/// `p(a),q(b)`; an empty string, `{}` or `∅` denote the empty set.
std::vector<GroundAtom> parse_atom_list(std::string_view text);

}  // namespace dlp
