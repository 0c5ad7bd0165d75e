#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfcov/ast.hpp"

namespace sfcov {

/// Parses one source file into its top-level class declarations.
/// Package and import headers are consumed and ignored. Throws SyntaxError
/// when the input falls outside the accepted grammar subset.
std::vector<ClassDecl> parse_file(const std::string& path, std::string_view text);

}  // namespace sfcov
