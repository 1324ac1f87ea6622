#pragma once

// WGF text format:
//
//   wgf 1
//   n <N>
//   e <u> <v> <w>      one line per edge, 0 <= u < v < N, w in {1,2}
//
// Edges are written sorted by (w, u, v), LF line endings, ASCII decimal.

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "wcage/graph.hpp"

namespace wcage {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

inline std::string to_wgf(const WGraph& g) {
  std::string out = "wgf 1\nn " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.light().edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + " 1\n";
  for (auto [u, v] : g.heavy().edges())
    out += "e " + std::to_string(u) + " " + std::to_string(v) + " 2\n";
  return out;
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline long long parse_int(std::string_view s, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ParseError(line, "expected an integer, got '" + std::string(s) + "'");
  return v;
}

}  // namespace detail

inline WGraph parse_wgf(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (lines[i].find('\r') != std::string_view::npos)
      throw ParseError(static_cast<int>(i + 1), "carriage return in WGF (LF line endings required)");
  if (lines.empty() || lines[0] != "wgf 1") throw ParseError(1, "missing 'wgf 1' header");
  if (lines.size() < 2) throw ParseError(2, "missing 'n <N>' line");
  auto head = detail::split_fields(lines[1]);
  if (head.size() != 2 || head[0] != "n") throw ParseError(2, "expected 'n <N>'");
  long long n = detail::parse_int(head[1], 2);
  if (n < 0 || n > 1'000'000) throw ParseError(2, "vertex count out of range");
  WGraph g(static_cast<int>(n));
  for (std::size_t i = 2; i < lines.size(); ++i) {
    int ln = static_cast<int>(i + 1);
    if (lines[i].empty()) {
      if (i + 1 == lines.size()) break;
      throw ParseError(ln, "empty line");
    }
    auto f = detail::split_fields(lines[i]);
    if (f.size() != 4 || f[0] != "e") throw ParseError(ln, "expected 'e <u> <v> <w>'");
    long long u = detail::parse_int(f[1], ln), v = detail::parse_int(f[2], ln),
              w = detail::parse_int(f[3], ln);
    if (!(0 <= u && u < v && v < n)) throw ParseError(ln, "edge endpoints must satisfy 0 <= u < v < N");
    if (w != 1 && w != 2) throw ParseError(ln, "edge weight must be 1 or 2");
    if (g.weight(static_cast<Vertex>(u), static_cast<Vertex>(v)) != EdgeWeight::none)
      throw ParseError(ln, "duplicate pair {" + std::to_string(u) + "," + std::to_string(v) + "}");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v),
               w == 1 ? EdgeWeight::light : EdgeWeight::heavy);
  }
  return g;
}

inline WGraph read_wgf_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_wgf(ss.str());
}

inline void write_wgf_file(const std::string& path, const WGraph& g) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_wgf(g);
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace wcage
