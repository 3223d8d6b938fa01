#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "regdiv/common.hpp"

namespace regdiv {

// Top-down evaluator for s(n):
//   s(4k)   = 2s(2k) - s(k)      s(4k+1) = 2s(2k) + s(2k+1)
//   s(4k+2) = 2s(2k+1) + s(2k)   s(4k+3) = 2s(2k+1) - s(k)
// with s(1) = 0, s(2) = s(3) = 1.
//
// Each instance owns its memo; do not share one instance across threads.
class Evaluator {
 public:
  static constexpr std::size_t kDefaultMemoCap = std::size_t{1} << 20;

  explicit Evaluator(std::size_t memo_cap = kDefaultMemoCap);

  SeqValue operator()(const SeqIndex& n);

  std::size_t memo_size() const { return memo_.size(); }
  std::size_t memo_cap() const { return memo_cap_; }
  void clear() { memo_.clear(); }

 private:
  std::size_t memo_cap_;
  std::map<SeqIndex, SeqValue> memo_;
};

// Convenience wrapper using a fresh evaluator.
SeqValue s_eval(const SeqIndex& n);

// Row-by-row generator keeping only the previous two rows. Row k holds
// s(2^k), ..., s(2^{k+1} - 1).
//
// Value is std::uint64_t (overflow-checked, throws std::overflow_error) or
// BigInt.
template <typename Value>
class RowGenerator {
 public:
  RowGenerator();
  // Resume from explicit state: cur is row `row`, prev is row `row - 1`.
  RowGenerator(std::uint64_t row, std::vector<Value> prev, std::vector<Value> cur);

  // Row index of current().
  std::uint64_t row() const { return row_; }
  const std::vector<Value>& current() const { return cur_; }
  const std::vector<Value>& previous() const { return prev_; }

  // Advance to the next row.
  void advance();

 private:
  std::uint64_t row_ = 0;
  std::vector<Value> prev_;
  std::vector<Value> cur_;
};

extern template class RowGenerator<std::uint64_t>;
extern template class RowGenerator<BigInt>;

// Streams s(1), ..., s(count) into sink(n, s(n)) using the 64-bit fast path.
// Throws std::overflow_error if a value does not fit; under the default count
// cap (2^24, row 24) every value fits.
void for_each_term_u64(std::uint64_t count,
                       const std::function<void(std::uint64_t, std::uint64_t)>& sink,
                       const Limits& limits = {});

// Streams s(1), ..., s(count); falls back to unbounded arithmetic when the
// fast path overflows.
void for_each_term(std::uint64_t count,
                   const std::function<void(std::uint64_t, const SeqValue&)>& sink,
                   const Limits& limits = {});

// [s(1), ..., s(count)].
std::vector<SeqValue> s_range(std::uint64_t count, const Limits& limits = {});

// The 2^k values of row k.
std::vector<SeqValue> row_values(std::uint64_t k, const Limits& limits = {});

// 2-adic valuation via v2(2k+1) = 0, v2(2k) = v2(k) + 1.
std::uint64_t v2(const BigInt& n);

// n-th number whose ternary expansion has no digit 1, via
// c(2k) = 3c(k) + 2, c(2k+1) = 3c(k+1), c(1) = 0.
BigInt cantor(const BigInt& n);

}  // namespace regdiv
