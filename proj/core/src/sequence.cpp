#include "regdiv/sequence.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "checked.hpp"

namespace regdiv {

namespace {

bool base_value(const SeqIndex& n, SeqValue& out) {
  if (n == 1) {
    out = 0;
    return true;
  }
  if (n == 2 || n == 3) {
    out = 1;
    return true;
  }
  return false;
}

SeqValue combine(unsigned residue, const SeqValue& sk, const SeqValue& s2k,
                 const SeqValue& s2k1) {
  switch (residue) {
    case 0:
      return 2 * s2k - sk;
    case 1:
      return 2 * s2k + s2k1;
    case 2:
      return 2 * s2k1 + s2k;
    default:
      return 2 * s2k1 - sk;
  }
}

}  // namespace

Evaluator::Evaluator(std::size_t memo_cap) : memo_cap_(memo_cap) {}

SeqValue Evaluator::operator()(const SeqIndex& n) {
  if (n < 1) throw DomainError("sequence index must be >= 1, got " + n.str());
  SeqValue out;
  if (base_value(n, out)) return out;
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  if (memo_.size() >= memo_cap_) memo_.clear();

  auto lookup = [&](const SeqIndex& x, SeqValue& v) {
    if (base_value(x, v)) return true;
    auto it = memo_.find(x);
    if (it == memo_.end()) return false;
    v = it->second;
    return true;
  };

  std::vector<SeqIndex> stack{n};
  while (!stack.empty()) {
    const SeqIndex x = stack.back();
    SeqValue known;
    if (lookup(x, known)) {
      stack.pop_back();
      continue;
    }
    const SeqIndex k = x >> 2;
    const std::array<SeqIndex, 3> deps{k, k << 1, (k << 1) + 1};
    std::array<SeqValue, 3> vals;
    bool ready = true;
    for (std::size_t i = 0; i < deps.size(); ++i) {
      if (!lookup(deps[i], vals[i])) {
        stack.push_back(deps[i]);
        ready = false;
      }
    }
    if (!ready) continue;
    if (memo_.size() >= memo_cap_) {
      throw ResourceLimitError("evaluator memo cap of " + std::to_string(memo_cap_) +
                               " entries exceeded");
    }
    const auto residue = static_cast<unsigned>(x & 3);
    memo_.emplace(x, combine(residue, vals[0], vals[1], vals[2]));
    stack.pop_back();
  }
  return memo_.at(n);
}

SeqValue s_eval(const SeqIndex& n) {
  Evaluator eval;
  return eval(n);
}

template <typename Value>
RowGenerator<Value>::RowGenerator() : cur_{Value{0}} {}

template <typename Value>
RowGenerator<Value>::RowGenerator(std::uint64_t row, std::vector<Value> prev,
                                  std::vector<Value> cur)
    : row_(row), prev_(std::move(prev)), cur_(std::move(cur)) {}

template <typename Value>
void RowGenerator<Value>::advance() {
  if (row_ == 0) {
    prev_ = std::move(cur_);
    cur_ = {Value{1}, Value{1}};
    row_ = 1;
    return;
  }
  std::vector<Value> next(cur_.size() * 2);
  for (std::size_t j = 0; j < next.size(); ++j) {
    const std::size_t q = j >> 2;
    const Value& sk = prev_[q];
    const Value& s2k = cur_[2 * q];
    const Value& s2k1 = cur_[2 * q + 1];
    switch (j & 3) {
      case 0:
        next[j] = detail::checked_sub(detail::checked_twice(s2k), sk);
        break;
      case 1:
        next[j] = detail::checked_add(detail::checked_twice(s2k), s2k1);
        break;
      case 2:
        next[j] = detail::checked_add(detail::checked_twice(s2k1), s2k);
        break;
      default:
        next[j] = detail::checked_sub(detail::checked_twice(s2k1), sk);
        break;
    }
  }
  prev_ = std::move(cur_);
  cur_ = std::move(next);
  ++row_;
}

template class RowGenerator<std::uint64_t>;
template class RowGenerator<BigInt>;

RowGenerator<BigInt> detail::promote(const RowGenerator<std::uint64_t>& gen) {
  std::vector<BigInt> prev(gen.previous().begin(), gen.previous().end());
  std::vector<BigInt> cur(gen.current().begin(), gen.current().end());
  return RowGenerator<BigInt>(gen.row(), std::move(prev), std::move(cur));
}

namespace {

void check_count(std::uint64_t count, const Limits& limits) {
  if (count < 1) throw DomainError("count must be >= 1");
  if (count > limits.max_count) {
    throw ResourceLimitError("count " + std::to_string(count) + " exceeds cap " +
                             std::to_string(limits.max_count));
  }
}

template <typename Value, typename Sink>
void emit_rows(RowGenerator<Value>& gen, std::uint64_t count, Sink&& sink) {
  while (true) {
    const std::uint64_t first = std::uint64_t{1} << gen.row();
    const auto& row = gen.current();
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::uint64_t n = first + j;
      if (n > count) return;
      sink(n, row[j]);
    }
    if ((first << 1) > count) return;
    gen.advance();
  }
}

}  // namespace

void for_each_term_u64(std::uint64_t count,
                       const std::function<void(std::uint64_t, std::uint64_t)>& sink,
                       const Limits& limits) {
  check_count(count, limits);
  RowGenerator<std::uint64_t> gen;
  emit_rows(gen, count, sink);
}

void for_each_term(std::uint64_t count,
                   const std::function<void(std::uint64_t, const SeqValue&)>& sink,
                   const Limits& limits) {
  check_count(count, limits);
  RowGenerator<std::uint64_t> gen;
  while (true) {
    const std::uint64_t first = std::uint64_t{1} << gen.row();
    const auto& row = gen.current();
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::uint64_t n = first + j;
      if (n > count) return;
      sink(n, SeqValue{row[j]});
    }
    if ((first << 1) > count) return;
    try {
      gen.advance();
    } catch (const std::overflow_error&) {
      // Promote: the generator state is unchanged when advance() throws.
      RowGenerator<BigInt> big = detail::promote(gen);
      big.advance();
      emit_rows(big, count, sink);
      return;
    }
  }
}

std::vector<SeqValue> s_range(std::uint64_t count, const Limits& limits) {
  std::vector<SeqValue> out;
  out.reserve(count <= limits.max_count ? count : 0);
  for_each_term(count, [&](std::uint64_t, const SeqValue& v) { out.push_back(v); }, limits);
  return out;
}

std::vector<SeqValue> row_values(std::uint64_t k, const Limits& limits) {
  if (k > limits.max_depth) {
    throw ResourceLimitError("row " + std::to_string(k) + " exceeds depth cap " +
                             std::to_string(limits.max_depth));
  }
  RowGenerator<std::uint64_t> gen;
  while (gen.row() < k) gen.advance();
  return {gen.current().begin(), gen.current().end()};
}

std::uint64_t v2(const BigInt& n) {
  if (n < 1) throw DomainError("v2 requires n >= 1");
  std::uint64_t e = 0;
  BigInt k = n;
  while (!bit_test(k, 0)) {
    k >>= 1;
    ++e;
  }
  return e;
}

BigInt cantor(const BigInt& n) {
  if (n < 1) throw DomainError("cantor requires n >= 1");
  // (c(k), c(k+1)), starting from k = 1.
  BigInt lo = 0;
  BigInt hi = 2;
  const auto top = msb(n);
  for (auto bit = top; bit-- > 0;) {
    if (bit_test(n, bit)) {
      lo = 3 * hi;
      hi = lo + 2;
    } else {
      BigInt next_lo = 3 * lo + 2;
      hi = 3 * hi;
      lo = std::move(next_lo);
    }
  }
  return lo;
}

}  // namespace regdiv
