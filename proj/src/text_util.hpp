#pragma once

// Line tokenizer shared by the text codecs. `#` starts a comment; blank
// lines are skipped; tokens are whitespace separated.

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "trigirth/error.hpp"

namespace trigirth::detail {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] inline void parse_fail(const Line& line, const std::string& what) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line.number) + ": " + what);
}

inline long long parse_int(const Line& line, const std::string& tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    parse_fail(line, "expected integer, got '" + tok + "'");
  }
  return v;
}

inline void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) {
    throw Error(ErrorKind::ParseError, "empty input, expected '" + std::string(magic) + " 1'");
  }
  const Line& h = lines.front();
  if (h.tokens.size() != 2 || h.tokens[0] != magic || h.tokens[1] != "1") {
    parse_fail(h, "expected header '" + std::string(magic) + " 1'");
  }
}

inline void expect_arity(const Line& line, std::size_t n) {
  if (line.tokens.size() != n) {
    parse_fail(line, "'" + line.tokens[0] + "' expects " + std::to_string(n - 1) + " fields");
  }
}

}  // namespace trigirth::detail
