#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace radsupp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that could not be parsed. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace radsupp
