#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "ecctree/tree.hpp"

namespace ecctree {

// Text format: first line n, then n-1 lines "u v". Lines whose first
// non-blank character is '#' and blank lines are ignored.
Tree parse_edge_list(std::istream& in);
Tree parse_edge_list(std::string_view text);

/// Writes "n" and one "u v" line per edge in stored order. Each entry of
/// `comments` becomes a leading "# ..." line.
void write_edge_list(std::ostream& out, const Tree& t, std::span<const std::string> comments = {});
std::string to_edge_list(const Tree& t);

}  // namespace ecctree
