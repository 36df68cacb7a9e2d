#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace projclust {

// Malformed arguments: empty sets, dimension mismatches, bad configs.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exhaustive oracle was asked to run on an instance above its size guard.
class SizeGuardError : public std::length_error {
 public:
  SizeGuardError(const std::string& what, std::size_t n, std::size_t max_n)
      : std::length_error(what + ": n = " + std::to_string(n) +
                          " exceeds the limit of " + std::to_string(max_n)),
        n_(n),
        max_n_(max_n) {}

  std::size_t n() const { return n_; }
  std::size_t max_n() const { return max_n_; }

 private:
  std::size_t n_;
  std::size_t max_n_;
};

// CSV ingestion failure; line() is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace projclust
