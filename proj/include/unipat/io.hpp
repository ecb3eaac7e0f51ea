#pragma once

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "unipat/digraph.hpp"

namespace unipat {

enum class InputFormat { auto_detect, edges, pattern };

/// Edge list:
///   # comment lines start with '#'
///   n m
///   tail head      (m lines, 0-based; repeated lines are parallel arcs)
/// Throws ParseError with the 1-based line number.
Digraph parse_edge_list(std::istream& in);

/// n lines of n characters '0'/'1'. '#' comment lines and blank lines are
/// skipped.
Pattern parse_pattern(std::istream& in);

struct ParsedInput {
  Digraph digraph;
  /// The concrete format that was read (never auto_detect).
  InputFormat format;
};

/// auto_detect picks the edge list when the first non-comment line is two
/// integers, and the pattern format otherwise.
ParsedInput parse_input(std::istream& in, InputFormat format = InputFormat::auto_detect);
ParsedInput read_input_file(const std::filesystem::path& path, InputFormat format = InputFormat::auto_detect);

void write_edge_list(std::ostream& out, const Digraph& d);
void write_pattern(std::ostream& out, const Pattern& p);

}  // namespace unipat
