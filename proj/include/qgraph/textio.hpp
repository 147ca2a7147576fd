#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qgraph/polyq.hpp"

namespace qgraph::textio {

struct Token {
  std::string text;
  int col;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

// Whitespace-separated tokens per line; '#' starts a comment; blank lines dropped.
std::vector<Line> tokenize(std::string_view text);
std::string read_file(const std::string& path);

[[noreturn]] void fail(const Line& line, const Token& tok, const std::string& msg);
[[noreturn]] void fail(const Line& line, const std::string& msg);

long parse_int(const Line& line, const Token& tok);
polyq::Rational parse_rational(const Line& line, const Token& tok);
void expect_count(const Line& line, std::size_t n);
void expect_at_least(const Line& line, std::size_t n);

}  // namespace qgraph::textio
