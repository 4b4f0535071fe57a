#pragma once

#include <stdexcept>
#include <string>

namespace prodpart {

/// A checked 64-bit count would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Brute-force enumeration produced more items than the caller allowed.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Requested index range does not fit the data it is checked against.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace prodpart
