#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rankcorr {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: out-of-range degrees, bad positions, length mismatches,
/// unparsable files. CLI exit status 2.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Structurally valid input that a measure cannot handle, e.g. rankings
/// with ties passed to a permutation-only measure. CLI exit status 3.
class UnsupportedInputError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured resource cap. CLI exit status 4.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, double count, std::int64_t cap)
      : Error(what), count_(count), cap_(cap) {}

  /// Number of items the computation would have produced. A double because
  /// extension counts grow factorially past any integer type.
  double count() const { return count_; }
  std::int64_t cap() const { return cap_; }

 private:
  double count_;
  std::int64_t cap_;
};

}  // namespace rankcorr
