#pragma once

#include <stdexcept>
#include <string>

namespace rainbowtri {

/// Bad parameters or inputs outside an operation's domain.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant the toolkit promises was found violated at runtime.
class invariant_violation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed textual input; carries the byte offset of the offending byte.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t byte_offset)
      : std::runtime_error(what + " (byte " + std::to_string(byte_offset) + ")"),
        offset_(byte_offset) {}

  std::size_t byte_offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace rainbowtri
