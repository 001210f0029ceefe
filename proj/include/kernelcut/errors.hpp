#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kernelcut {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad instance, bad file, violated precondition.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
  ValidationError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  /// 1-based line of the offending input, 0 when not file-related.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_ = 0;
};

/// An exhaustive routine would exceed its enumeration cap.
class RefusedScale : public Error {
 public:
  using Error::Error;
};

/// Lattice basis rows are linearly dependent.
class DegenerateBasis : public Error {
 public:
  using Error::Error;
};

}  // namespace kernelcut
