#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace flatpark {

/// Exact nonnegative count. Every enumerative quantity in the library is a Count.
using Count = boost::multiprecision::cpp_int;

/// Bad parameters: out-of-range keys, malformed input, length mismatches.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A map was handed a value outside the set it is defined on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exhaustive enumeration would exceed the configured word-length ceiling.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string to_string(const Count& c) { return c.str(); }

}  // namespace flatpark
