#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace regdiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// 1-based position in s, and the value stored there.
using SeqIndex = BigInt;
using SeqValue = BigInt;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A request exceeded a configured cap (count, depth, max_m, memo size).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidPairError : public Error {
 public:
  using Error::Error;
};

class RootHasNoParentError : public Error {
 public:
  using Error::Error;
};

class BudgetExceededError : public Error {
 public:
  using Error::Error;
};

// Raised when an identity that must hold (e.g. exactly one valid inverse
// map) is violated. Seeing one means a bug or a false theorem.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

// Resource caps shared by the library and the CLI.
struct Limits {
  std::uint64_t max_m = 22;
  std::uint64_t max_depth = 20;
  std::uint64_t max_count = std::uint64_t{1} << 24;
  std::uint64_t trial_budget = 1'000'000;

  // Defaults overridden by REGDIV_MAX_M, REGDIV_MAX_DEPTH, REGDIV_MAX_COUNT.
  static Limits from_env();
};

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace regdiv
