#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "regdiv/common.hpp"

namespace regdiv {

// Node (d, m) of the integer pair tree: d >= 1, m >= 0 and d | m^2 + 1.
class Pair {
 public:
  // Validating constructor; throws InvalidPairError.
  Pair(BigInt d, BigInt m);

  // Skips validation. The caller guarantees the invariants.
  static Pair unchecked(BigInt d, BigInt m);

  static bool is_valid(const BigInt& d, const BigInt& m);

  const BigInt& d() const { return d_; }
  const BigInt& m() const { return m_; }

  // (m^2 + 1) / d, the first component of the mirror pair.
  BigInt cofactor() const;

  std::string to_string() const;

  friend bool operator==(const Pair&, const Pair&) = default;
  friend bool operator<(const Pair& a, const Pair& b) {
    return a.d_ < b.d_ || (a.d_ == b.d_ && a.m_ < b.m_);
  }

 private:
  struct NoCheck {};
  Pair(BigInt d, BigInt m, NoCheck) : d_(std::move(d)), m_(std::move(m)) {}

  BigInt d_;
  BigInt m_;
};

std::ostream& operator<<(std::ostream& os, const Pair& p);

enum class Step : char { L = 'L', R = 'R' };

// Root-to-node word over {L, R}. The empty word is index 1; appending L
// maps index k to 2k, appending R maps k to 2k + 1.
class PathWord {
 public:
  PathWord() = default;
  explicit PathWord(std::vector<Step> steps) : steps_(std::move(steps)) {}

  // Parses a string of 'L'/'R' characters; throws DomainError otherwise.
  static PathWord parse(std::string_view text);
  static PathWord from_index(const SeqIndex& n);

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  void push_back(Step s) { steps_.push_back(s); }

  SeqIndex to_index() const;
  // Applies the word to `start`, left to right.
  Pair apply(const Pair& start) const;
  std::string to_string() const;

  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  std::vector<Step> steps_;
};

Pair root_pair();

// L(d, m) = (d, m + d)
Pair left_child(const Pair& p);
// R(d, m) = (((m + d)^2 + 1) / d, m + (m^2 + 1) / d)
Pair right_child(const Pair& p);
Pair child(const Pair& p, Step s);
// iota(d, m) = ((m^2 + 1) / d, m)
Pair involute(const Pair& p);

struct ParentLink {
  Step step;  // the map that takes `pair` to the child
  Pair pair;

  friend bool operator==(const ParentLink&, const ParentLink&) = default;
};

// Exactly one of L^-1 and R^-1 yields a nonnegative second component; this is
// checked, and a violation raises InternalConsistencyError.
ParentLink parent(const Pair& p);

PathWord path_from_root(const Pair& p);
SeqIndex index_of_pair(const Pair& p);
Pair pair_at_index(const SeqIndex& n);

// Rows 0..depth, each left to right.
std::vector<std::vector<Pair>> pair_rows(std::uint64_t depth, const Limits& limits = {});

}  // namespace regdiv
