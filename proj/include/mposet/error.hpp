#pragma once

#include <stdexcept>
#include <string>

namespace mposet {

enum class ErrorKind {
  InvalidInput,     // malformed permutation text, duplicate entries, bad relation matrix
  InvalidArgument,  // out-of-range position/level, length mismatch, unknown claim
  ResourceLimit,    // configured cap exceeded
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace mposet
