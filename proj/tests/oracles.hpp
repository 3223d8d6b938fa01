#pragma once

// Test-only reference implementations, independent of the library.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

// s(1..2^{depth+1} - 1) read row by row off the pair tree, built breadth
// first with 64-bit arithmetic straight from the child-map definitions.
inline std::vector<std::uint64_t> tree_sequence(unsigned depth) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nodes{{1, 0}};
  for (std::size_t i = 0; nodes.size() < (std::size_t{1} << (depth + 1)) - 1; ++i) {
    auto [d, m] = nodes[i];
    nodes.emplace_back(d, m + d);
    nodes.emplace_back(((m + d) * (m + d) + 1) / d, m + (m * m + 1) / d);
  }
  std::vector<std::uint64_t> out{0};  // out[0] unused
  for (auto& [d, m] : nodes) out.push_back(m);
  return out;
}

inline std::uint64_t naive_tau(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t d = 1; d <= n; ++d) count += (n % d == 0);
  return count;
}

inline std::vector<std::uint64_t> naive_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

inline std::uint64_t division_v2(std::uint64_t n) {
  std::uint64_t e = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++e;
  }
  return e;
}

inline bool ternary_no_ones(std::uint64_t v) {
  for (; v > 0; v /= 3)
    if (v % 3 == 1) return false;
  return true;
}

// Increasing list of the first `count` nonnegative integers with no ternary 1.
inline std::vector<std::uint64_t> cantor_numbers(std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = 0; out.size() < count; ++v)
    if (ternary_no_ones(v)) out.push_back(v);
  return out;
}

inline std::vector<std::uint64_t> fib_table(std::size_t n) {
  std::vector<std::uint64_t> f{0, 0, 1};  // f[1] = 0, f[2] = 1
  while (f.size() <= n) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  return f;
}

}  // namespace oracle
