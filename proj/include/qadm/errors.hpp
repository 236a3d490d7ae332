#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qadm {

// Malformed input text (algebra files, terms, clauses).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        source_(source),
        line_(line) {}

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

class SignatureMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Thrown when a computation would exceed a configured cap. Carries the cap
// name and the size that was reached (or requested) when it tripped.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::string cap, std::uint64_t limit, std::uint64_t attained)
      : std::runtime_error(cap + " exceeded: limit " + std::to_string(limit) +
                           ", attained " + std::to_string(attained)),
        cap_(std::move(cap)),
        limit_(limit),
        attained_(attained) {}

  const std::string& cap() const { return cap_; }
  std::uint64_t limit() const { return limit_; }
  std::uint64_t attained() const { return attained_; }

 private:
  std::string cap_;
  std::uint64_t limit_;
  std::uint64_t attained_;
};

}  // namespace qadm
