#pragma once

#include <filesystem>
#include <string>

#include "asc/codes.hpp"

namespace asc {

// Code files are JSON: {"beta": 1|2, "n": n, "codewords": [w_0, w_1, ...]}
// where each w_i lists the basis entries row-major as [re, im] pairs.

std::string code_to_json(const SubspaceCode& code);

/// Parses and re-validates every basis (orthonormal rows, real entries when
/// beta = 1). Throws InvalidArgument on malformed documents.
SubspaceCode code_from_json(const std::string& text);

void save_code(const SubspaceCode& code, const std::filesystem::path& path);
SubspaceCode load_code(const std::filesystem::path& path);

}  // namespace asc
