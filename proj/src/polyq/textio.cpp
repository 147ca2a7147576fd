#include "qgraph/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qgraph/errors.hpp"

namespace qgraph::textio {

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{lineno, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void fail(const Line& line, const Token& tok, const std::string& msg) {
  throw ParseError(msg + " (got '" + tok.text + "')", line.number, tok.col);
}

void fail(const Line& line, const std::string& msg) {
  throw ParseError(msg, line.number, line.tokens.empty() ? 1 : line.tokens.front().col);
}

long parse_int(const Line& line, const Token& tok) {
  const std::string& s = tok.text;
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) fail(line, tok, "expected an integer");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) fail(line, tok, "expected an integer");
  if (s.size() - i > 9) fail(line, tok, "integer out of range");
  return std::stol(s);
}

polyq::Rational parse_rational(const Line& line, const Token& tok) {
  try {
    return polyq::parse_rational(tok.text);
  } catch (const std::invalid_argument& e) {
    fail(line, tok, e.what());
  }
}

void expect_count(const Line& line, std::size_t n) {
  if (line.tokens.size() != n)
    fail(line, "expected " + std::to_string(n) + " fields, found " + std::to_string(line.tokens.size()));
}

void expect_at_least(const Line& line, std::size_t n) {
  if (line.tokens.size() < n)
    fail(line, "expected at least " + std::to_string(n) + " fields, found " + std::to_string(line.tokens.size()));
}

}  // namespace qgraph::textio
