#pragma once

#include <stdexcept>
#include <string>

namespace qgraph {

// Precondition violated by otherwise well-formed input.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input present but missing a decoration an operation needs (e.g. rot values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int col)
      : std::runtime_error(what), line_(line), col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

}  // namespace qgraph
