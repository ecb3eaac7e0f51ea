#include "unipat/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "unipat/error.hpp"

namespace unipat {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Non-blank, non-comment lines with their 1-based numbers.
std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string t = trim(raw);
    if (t.empty() || t.front() == '#') continue;
    lines.push_back({number, std::move(t)});
  }
  return lines;
}

std::optional<std::vector<std::size_t>> integers(const std::string& text) {
  std::istringstream ss(text);
  std::vector<std::size_t> values;
  std::string token;
  while (ss >> token) {
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
    values.push_back(v);
  }
  return values;
}

bool looks_like_header(const std::string& text) {
  const auto v = integers(text);
  return v && v->size() == 2;
}

Digraph edges_from_lines(const std::vector<Line>& lines) {
  if (lines.empty()) {
    throw ParseError(0, "empty edge list");
  }
  const auto header = integers(lines.front().text);
  if (!header || header->size() != 2) {
    throw ParseError(lines.front().number, "expected header 'n m'");
  }
  const std::size_t n = (*header)[0];
  const std::size_t m = (*header)[1];
  if (n == 0) {
    throw ParseError(lines.front().number, "vertex count must be >= 1");
  }
  if (lines.size() - 1 != m) {
    const std::size_t at = lines.size() - 1 < m ? 0 : lines[m + 1].number;
    throw ParseError(at, "expected " + std::to_string(m) + " arcs, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto v = integers(lines[k].text);
    if (!v || v->size() != 2) {
      throw ParseError(lines[k].number, "expected 'tail head'");
    }
    if ((*v)[0] >= n || (*v)[1] >= n) {
      throw ParseError(lines[k].number, "vertex out of range (n = " + std::to_string(n) + ")");
    }
    arcs.push_back({(*v)[0], (*v)[1]});
  }
  return Digraph(n, std::move(arcs));
}

Pattern pattern_from_lines(const std::vector<Line>& lines) {
  if (lines.empty()) {
    throw ParseError(0, "empty pattern");
  }
  const std::size_t n = lines.size();
  std::vector<std::string> rows;
  rows.reserve(n);
  for (const Line& line : lines) {
    if (line.text.size() != n) {
      throw ParseError(line.number, "expected " + std::to_string(n) + " characters, found " +
                                        std::to_string(line.text.size()));
    }
    for (char c : line.text) {
      if (c != '0' && c != '1') {
        throw ParseError(line.number, std::string("unexpected character '") + c + "'");
      }
    }
    rows.push_back(line.text);
  }
  return Pattern::from_rows(rows);
}

}  // namespace

Digraph parse_edge_list(std::istream& in) { return edges_from_lines(content_lines(in)); }

Pattern parse_pattern(std::istream& in) { return pattern_from_lines(content_lines(in)); }

ParsedInput parse_input(std::istream& in, InputFormat format) {
  const auto lines = content_lines(in);
  if (format == InputFormat::auto_detect) {
    format = !lines.empty() && looks_like_header(lines.front().text) ? InputFormat::edges : InputFormat::pattern;
  }
  if (format == InputFormat::edges) {
    return {edges_from_lines(lines), InputFormat::edges};
  }
  return {digraph_of(pattern_from_lines(lines)), InputFormat::pattern};
}

ParsedInput read_input_file(const std::filesystem::path& path, InputFormat format) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open " + path.string());
  }
  return parse_input(in, format);
}

void write_edge_list(std::ostream& out, const Digraph& d) {
  out << d.vertex_count() << ' ' << d.arc_count() << '\n';
  for (const Arc& a : d.arcs()) {
    out << a.tail << ' ' << a.head << '\n';
  }
}

void write_pattern(std::ostream& out, const Pattern& p) {
  for (const std::string& row : p.rows()) {
    out << row << '\n';
  }
}

}  // namespace unipat
