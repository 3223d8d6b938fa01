#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "regdiv/common.hpp"
#include "regdiv/divisors.hpp"
#include "regdiv/pairtree.hpp"

namespace regdiv {

using HighPrecisionReal = boost::multiprecision::mpfr_float;

// All n with s(n) = m, next to tau(m^2 + 1).
struct OccurrenceRecord {
  std::uint64_t m = 0;
  std::vector<SeqIndex> indices;  // sorted
  BigInt tau_value;

  std::size_t count() const { return indices.size(); }
  bool pass() const { return tau_value == indices.size(); }
};

struct VerificationReport {
  std::uint64_t max_m = 0;
  std::vector<OccurrenceRecord> records;  // one per m = 0..max_m
  bool all_pass = false;
};

// {max_m, records: [{m, tau, count, indices, pass}], all_pass}
std::string to_json(const VerificationReport& report, int indent = -1);

// Scans s(1), ..., s(2^{m+1} - 1); no later index can hold the value m because
// every value on row k is at least k.
OccurrenceRecord occurrences_brute(std::uint64_t m, const Limits& limits = {});

// One index per divisor d of m^2 + 1, via the tree position of (d, m).
OccurrenceRecord indices_of(const BigInt& m, std::uint64_t budget = kDefaultTrialBudget);

// One streaming pass over s(1), ..., s(2^{max_m+1} - 1) tallying every value
// <= max_m, compared against tau(m^2 + 1).
VerificationReport verify_theorem(std::uint64_t max_m, const Limits& limits = {});

// Coefficients of x^0..x^max_m in sum_n x^{s(n)}.
std::vector<BigInt> gf_coefficients(std::uint64_t max_m, const Limits& limits = {});

// Sum of row k: r_k = 5 r_{k-1} - 2 r_{k-2}, r_0 = 0, r_1 = 2.
BigInt row_sum_recurrence(std::uint64_t k);
// Sum of row k by enumeration; k bounded by limits.max_depth.
BigInt row_sum_direct(std::uint64_t k, const Limits& limits = {});
// Recurrence value, cross-checked against direct summation when k is within
// the depth cap. Throws InternalConsistencyError on disagreement.
BigInt row_sum(std::uint64_t k, const Limits& limits = {});

Rational row_average_exact(std::uint64_t k, const Limits& limits = {});

// Working precision used by row_average_closed_form, in bits.
unsigned closed_form_precision_bits(std::uint64_t k);

// ((5 + sqrt17)^k - (5 - sqrt17)^k) / (2^{2k-1} sqrt17), evaluated with
// closed_form_precision_bits(k) bits through MPFR. The result carries that
// precision.
HighPrecisionReal row_average_closed_form(std::uint64_t k);

// m-component after k alternating steps from the root, starting with `first`.
BigInt zigzag_value(std::uint64_t k, Step first);
BigInt row_max_enumerated(std::uint64_t k, const Limits& limits = {});
// Zigzag value, checked against the enumerated maximum within the depth cap
// and against the mirror zigzag word. Equals fib(2k + 1) (F_1 = 0 indexing).
BigInt row_max(std::uint64_t k, const Limits& limits = {});

// Fibonacci number with F_1 = 0, F_2 = 1.
struct FibValue {
  std::uint64_t n = 0;
  BigInt value;
};

FibValue fib(std::uint64_t n);

// a(1) = 1; a(4k) = 2a(n-1), a(4k+1) = a(n-1) + 1, a(4k+2) = 2a(n-1) + 1,
// a(4k+3) = a(n-1) - 1.
SeqIndex fib_path_index(std::uint64_t n);
std::vector<SeqIndex> fib_path_indices(std::uint64_t max_n);

// s(a(n)) == F_n for every 1 <= n <= max_n.
bool fib_path_check(std::uint64_t max_n);

struct Factorization {
  BigInt u;
  BigInt v;
};

// u * v = F_n^2 + 1 with F_1 = 0 indexing:
//   n odd:  F_{n-1} F_{n+1}
//   n even: F_{n-2} F_{n+2}
// For n > 4 both factors exceed 1. Requires n >= 3.
Factorization fib_square_factorization(std::uint64_t n);

// {i : s(i) = n} == {2^n, 2^{n+1} - 1}; false for n = 0 where the set is {1}.
bool prime_criterion(std::uint64_t n, const Limits& limits = {});

}  // namespace regdiv
