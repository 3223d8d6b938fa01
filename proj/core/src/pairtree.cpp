#include "regdiv/pairtree.hpp"

#include <algorithm>
#include <sstream>

namespace regdiv {

Pair::Pair(BigInt d, BigInt m) : d_(std::move(d)), m_(std::move(m)) {
  if (!is_valid(d_, m_)) {
    throw InvalidPairError("(" + d_.str() + "," + m_.str() + ") is not a divisor pair");
  }
}

Pair Pair::unchecked(BigInt d, BigInt m) { return Pair(std::move(d), std::move(m), NoCheck{}); }

bool Pair::is_valid(const BigInt& d, const BigInt& m) {
  if (d < 1 || m < 0) return false;
  return (m * m + 1) % d == 0;
}

BigInt Pair::cofactor() const { return (m_ * m_ + 1) / d_; }

std::string Pair::to_string() const { return "(" + d_.str() + "," + m_.str() + ")"; }

std::ostream& operator<<(std::ostream& os, const Pair& p) { return os << p.to_string(); }

PathWord PathWord::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    if (c == 'L') {
      steps.push_back(Step::L);
    } else if (c == 'R') {
      steps.push_back(Step::R);
    } else {
      throw DomainError(std::string("path word may contain only L and R, got '") + c + "'");
    }
  }
  return PathWord(std::move(steps));
}

PathWord PathWord::from_index(const SeqIndex& n) {
  if (n < 1) throw DomainError("sequence index must be >= 1, got " + n.str());
  const auto top = msb(n);
  std::vector<Step> steps;
  steps.reserve(top);
  for (auto bit = top; bit-- > 0;) steps.push_back(bit_test(n, bit) ? Step::R : Step::L);
  return PathWord(std::move(steps));
}

SeqIndex PathWord::to_index() const {
  SeqIndex n = 1;
  for (Step s : steps_) {
    n <<= 1;
    if (s == Step::R) n += 1;
  }
  return n;
}

Pair PathWord::apply(const Pair& start) const {
  Pair p = start;
  for (Step s : steps_) p = child(p, s);
  return p;
}

std::string PathWord::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(static_cast<char>(s));
  return out;
}

Pair root_pair() { return Pair::unchecked(1, 0); }

Pair left_child(const Pair& p) { return Pair::unchecked(p.d(), p.m() + p.d()); }

Pair right_child(const Pair& p) {
  // ((m + d)^2 + 1) / d = d + 2m + e with e = (m^2 + 1) / d.
  const BigInt e = p.cofactor();
  return Pair::unchecked(p.d() + 2 * p.m() + e, p.m() + e);
}

Pair child(const Pair& p, Step s) { return s == Step::L ? left_child(p) : right_child(p); }

Pair involute(const Pair& p) { return Pair::unchecked(p.cofactor(), p.m()); }

ParentLink parent(const Pair& p) {
  if (p.m() == 0) throw RootHasNoParentError("(1,0) is the root and has no parent");
  const BigInt e = p.cofactor();
  const BigInt left_m = p.m() - p.d();
  const BigInt right_m = p.m() - e;
  const bool left_ok = left_m >= 0;
  const bool right_ok = right_m >= 0;
  if (left_ok == right_ok) {
    throw InternalConsistencyError("pair " + p.to_string() + " has " +
                                   (left_ok ? "two" : "no") + " valid inverse maps");
  }
  if (left_ok) return {Step::L, Pair(p.d(), left_m)};
  // ((M - e)^2 + 1) / e = d + e - 2M
  return {Step::R, Pair(p.d() + e - 2 * p.m(), right_m)};
}

PathWord path_from_root(const Pair& p) {
  std::vector<Step> reversed;
  Pair cur = p;
  while (cur.m() != 0) {
    ParentLink link = parent(cur);
    reversed.push_back(link.step);
    cur = std::move(link.pair);
  }
  std::reverse(reversed.begin(), reversed.end());
  return PathWord(std::move(reversed));
}

SeqIndex index_of_pair(const Pair& p) { return path_from_root(p).to_index(); }

Pair pair_at_index(const SeqIndex& n) {
  if (n < 1) throw DomainError("sequence index must be >= 1, got " + n.str());
  Pair p = root_pair();
  for (auto bit = msb(n); bit-- > 0;) p = bit_test(n, bit) ? right_child(p) : left_child(p);
  return p;
}

std::vector<std::vector<Pair>> pair_rows(std::uint64_t depth, const Limits& limits) {
  if (depth > limits.max_depth) {
    throw ResourceLimitError("tree depth " + std::to_string(depth) + " exceeds cap " +
                             std::to_string(limits.max_depth));
  }
  std::vector<std::vector<Pair>> rows;
  rows.reserve(depth + 1);
  rows.push_back({root_pair()});
  for (std::uint64_t k = 1; k <= depth; ++k) {
    const auto& above = rows.back();
    std::vector<Pair> row;
    row.reserve(above.size() * 2);
    for (const Pair& p : above) {
      row.push_back(left_child(p));
      row.push_back(right_child(p));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace regdiv
