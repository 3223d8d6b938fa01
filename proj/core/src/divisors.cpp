#include "regdiv/divisors.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace regdiv {

namespace {

template <typename Int>
void trial_divide(const Int& n, const Int& root, std::vector<BigInt>& small,
                  std::vector<BigInt>& large) {
  for (Int d = 1; d <= root; ++d) {
    if (n % d != 0) continue;
    small.emplace_back(d);
    const Int q = n / d;
    if (q != d) large.emplace_back(q);
  }
}

}  // namespace

DivisorList divisors(const BigInt& n, std::uint64_t budget) {
  if (n < 1) throw DomainError("divisors requires n >= 1, got " + n.str());
  const BigInt root = sqrt(n);
  if (root > budget) {
    throw BudgetExceededError("trial division of " + n.str() + " needs " + root.str() +
                              " steps, budget is " + std::to_string(budget));
  }
  std::vector<BigInt> small;
  std::vector<BigInt> large;
  if (n <= std::numeric_limits<std::uint64_t>::max()) {
    trial_divide(n.convert_to<std::uint64_t>(), root.convert_to<std::uint64_t>(), small, large);
  } else {
    trial_divide(n, root, small, large);
  }
  std::reverse(large.begin(), large.end());
  small.insert(small.end(), std::make_move_iterator(large.begin()),
               std::make_move_iterator(large.end()));
  return {n, std::move(small)};
}

BigInt tau(const BigInt& n, std::uint64_t budget) { return divisors(n, budget).divisors.size(); }

bool is_prime(const BigInt& n, std::uint64_t budget) { return tau(n, budget) == 2; }

BigInt tau_m2p1(const BigInt& m, std::uint64_t budget) {
  if (m < 0) throw DomainError("tau_m2p1 requires m >= 0, got " + m.str());
  return tau(m * m + 1, budget);
}

}  // namespace regdiv
