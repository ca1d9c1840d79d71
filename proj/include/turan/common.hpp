#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace turan {

inline constexpr const char* kVersion = "1.0.0";

// Exact counters throughout: copy counts overflow 64 bits already on small hosts.
using BigInt = boost::multiprecision::cpp_int;

// Base class for library failures that are not plain precondition violations
// (those throw std::invalid_argument).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual graph input (graph6 or edge list).  Messages carry the
// byte offset of the first bad byte.
struct FormatError : Error {
  using Error::Error;
};

// Parameters that are structurally impossible to satisfy (no admissible prime
// power, size caps, divisibility constraints).
struct InfeasibleError : Error {
  using Error::Error;
};

// An internal cross-check failed.  Any throw of this type is a bug.
struct ConsistencyError : Error {
  using Error::Error;
};

// n choose k, exact.
BigInt binomial(long long n, long long k);

}  // namespace turan
