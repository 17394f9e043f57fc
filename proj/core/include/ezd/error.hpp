#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ezd {

// Problems with user-supplied data: malformed polynomials, invalid moduli,
// mixed fields, ill-formed algebra descriptions.  The CLI maps these to
// exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured bound was exceeded: the Artinian degree bound, the retry
// limit of a randomized reduction, or an enumeration size gate.  The CLI
// maps these to exit code 4.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A cross-check between two independent computation routes disagreed, or an
// internal consistency assertion failed.  Never expected on valid input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parse failure carrying a 0-based byte offset into the input text.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ezd
