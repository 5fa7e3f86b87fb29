#pragma once

#include <stdexcept>
#include <string>

namespace legendre {

// Domain failure raised by any module (bad jet operation, violated
// precondition on a curve, failed hypothesis). The CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input: expression syntax, bad flag values. Exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace legendre
