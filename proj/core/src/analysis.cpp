#include "regdiv/analysis.hpp"

#include <algorithm>
#include <limits>

#include <nlohmann/json.hpp>

#include "regdiv/sequence.hpp"

namespace regdiv {

namespace {

void check_max_m(std::uint64_t max_m, const Limits& limits) {
  if (max_m > limits.max_m) {
    throw ResourceLimitError("max_m " + std::to_string(max_m) + " exceeds cap " +
                             std::to_string(limits.max_m));
  }
}

// Indices with value v for every v <= max_m, in increasing order.
std::vector<std::vector<std::uint64_t>> tally(std::uint64_t max_m, const Limits& limits) {
  check_max_m(max_m, limits);
  if (max_m > 62) throw ResourceLimitError("max_m above 62 cannot be enumerated");
  const std::uint64_t count = (std::uint64_t{1} << (max_m + 1)) - 1;
  Limits scan = limits;
  scan.max_count = std::max(scan.max_count, count);

  std::vector<std::vector<std::uint64_t>> hits(max_m + 1);
  std::uint64_t row = 0;
  for_each_term_u64(
      count,
      [&](std::uint64_t n, std::uint64_t v) {
        if ((n >> row) > 1) ++row;
        if (v < row) {
          throw InternalConsistencyError("s(" + std::to_string(n) + ") = " + std::to_string(v) +
                                         " lies below its row " + std::to_string(row));
        }
        if (v <= max_m) hits[v].push_back(n);
      },
      scan);
  return hits;
}

OccurrenceRecord make_record(std::uint64_t m, const std::vector<std::uint64_t>& hits,
                             const Limits& limits) {
  OccurrenceRecord rec;
  rec.m = m;
  rec.indices.assign(hits.begin(), hits.end());
  rec.tau_value = tau_m2p1(m, limits.trial_budget);
  return rec;
}

}  // namespace

std::string to_json(const VerificationReport& report, int indent) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& rec : report.records) {
    nlohmann::ordered_json indices = nlohmann::ordered_json::array();
    for (const auto& i : rec.indices) indices.push_back(i.convert_to<std::uint64_t>());
    records.push_back({{"m", rec.m},
                       {"tau", rec.tau_value.convert_to<std::uint64_t>()},
                       {"count", rec.count()},
                       {"indices", std::move(indices)},
                       {"pass", rec.pass()}});
  }
  nlohmann::ordered_json j{
      {"max_m", report.max_m}, {"records", std::move(records)}, {"all_pass", report.all_pass}};
  return j.dump(indent);
}

OccurrenceRecord occurrences_brute(std::uint64_t m, const Limits& limits) {
  const auto hits = tally(m, limits);
  return make_record(m, hits[m], limits);
}

OccurrenceRecord indices_of(const BigInt& m, std::uint64_t budget) {
  if (m < 0) throw DomainError("indices_of requires m >= 0");
  OccurrenceRecord rec;
  rec.m = m.convert_to<std::uint64_t>();
  const DivisorList divs = divisors(m * m + 1, budget);
  rec.tau_value = divs.divisors.size();
  rec.indices.reserve(divs.divisors.size());
  for (const auto& d : divs.divisors) rec.indices.push_back(index_of_pair(Pair(d, m)));
  std::sort(rec.indices.begin(), rec.indices.end());
  return rec;
}

VerificationReport verify_theorem(std::uint64_t max_m, const Limits& limits) {
  const auto hits = tally(max_m, limits);
  VerificationReport report;
  report.max_m = max_m;
  report.all_pass = true;
  for (std::uint64_t m = 0; m <= max_m; ++m) {
    report.records.push_back(make_record(m, hits[m], limits));
    report.all_pass = report.all_pass && report.records.back().pass();
  }
  return report;
}

std::vector<BigInt> gf_coefficients(std::uint64_t max_m, const Limits& limits) {
  const auto hits = tally(max_m, limits);
  std::vector<BigInt> coeffs;
  coeffs.reserve(hits.size());
  for (const auto& h : hits) coeffs.emplace_back(h.size());
  return coeffs;
}

BigInt row_sum_recurrence(std::uint64_t k) {
  BigInt prev = 0;
  BigInt cur = 2;
  if (k == 0) return prev;
  for (std::uint64_t i = 1; i < k; ++i) {
    BigInt next = 5 * cur - 2 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt row_sum_direct(std::uint64_t k, const Limits& limits) {
  BigInt total = 0;
  for (const auto& v : row_values(k, limits)) total += v;
  return total;
}

BigInt row_sum(std::uint64_t k, const Limits& limits) {
  BigInt r = row_sum_recurrence(k);
  if (k <= limits.max_depth) {
    const BigInt direct = row_sum_direct(k, limits);
    if (direct != r) {
      throw InternalConsistencyError("row " + std::to_string(k) + ": direct sum " + direct.str() +
                                     " != recurrence " + r.str());
    }
  }
  return r;
}

Rational row_average_exact(std::uint64_t k, const Limits& limits) {
  return Rational(row_sum(k, limits), BigInt(1) << k);
}

unsigned closed_form_precision_bits(std::uint64_t k) {
  return static_cast<unsigned>(2 * k + 60);
}

namespace {

class MpfrValue {
 public:
  explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(value_, bits); }
  ~MpfrValue() { mpfr_clear(value_); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;

  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

}  // namespace

HighPrecisionReal row_average_closed_form(std::uint64_t k) {
  // Every intermediate carries its own precision; no global mpfr state is touched.
  const auto bits = static_cast<mpfr_prec_t>(closed_form_precision_bits(k));
  MpfrValue root17(bits), plus(bits), minus(bits), denom(bits), result(bits);
  mpfr_sqrt_ui(root17.get(), 17, MPFR_RNDN);
  mpfr_ui_sub(minus.get(), 5, root17.get(), MPFR_RNDN);
  mpfr_add_ui(plus.get(), root17.get(), 5, MPFR_RNDN);
  mpfr_pow_ui(plus.get(), plus.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  mpfr_pow_ui(minus.get(), minus.get(), static_cast<unsigned long>(k), MPFR_RNDN);
  mpfr_sub(result.get(), plus.get(), minus.get(), MPFR_RNDN);
  // 2^{2k-1} sqrt(17)
  mpfr_mul_2si(denom.get(), root17.get(), 2 * static_cast<long>(k) - 1, MPFR_RNDN);
  mpfr_div(result.get(), result.get(), denom.get(), MPFR_RNDN);
  return HighPrecisionReal(result.get());
}

BigInt zigzag_value(std::uint64_t k, Step first) {
  Pair p = root_pair();
  Step step = first;
  for (std::uint64_t i = 0; i < k; ++i) {
    p = child(p, step);
    step = step == Step::L ? Step::R : Step::L;
  }
  return p.m();
}

BigInt row_max_enumerated(std::uint64_t k, const Limits& limits) {
  const auto row = row_values(k, limits);
  return *std::max_element(row.begin(), row.end());
}

BigInt row_max(std::uint64_t k, const Limits& limits) {
  if (k < 1) throw DomainError("row_max requires k >= 1");
  BigInt lr = zigzag_value(k, Step::L);
  const BigInt rl = zigzag_value(k, Step::R);
  if (lr != rl) {
    throw InternalConsistencyError("zigzag words disagree on row " + std::to_string(k));
  }
  if (k <= limits.max_depth) {
    const BigInt enumerated = row_max_enumerated(k, limits);
    if (enumerated != lr) {
      throw InternalConsistencyError("row " + std::to_string(k) + " maximum " + enumerated.str() +
                                     " != zigzag value " + lr.str());
    }
  }
  return lr;
}

FibValue fib(std::uint64_t n) {
  if (n < 1) throw DomainError("fib requires n >= 1 (F_1 = 0)");
  BigInt a = 0;  // F_1
  BigInt b = 1;  // F_2
  for (std::uint64_t i = 1; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return {n, a};
}

std::vector<SeqIndex> fib_path_indices(std::uint64_t max_n) {
  std::vector<SeqIndex> out;
  if (max_n == 0) return out;
  out.reserve(max_n);
  SeqIndex a = 1;
  out.push_back(a);
  for (std::uint64_t n = 2; n <= max_n; ++n) {
    switch (n % 4) {
      case 0:
        a = 2 * a;
        break;
      case 1:
        a = a + 1;
        break;
      case 2:
        a = 2 * a + 1;
        break;
      default:
        a = a - 1;
        break;
    }
    out.push_back(a);
  }
  return out;
}

SeqIndex fib_path_index(std::uint64_t n) {
  if (n < 1) throw DomainError("fib_path_index requires n >= 1");
  return fib_path_indices(n).back();
}

bool fib_path_check(std::uint64_t max_n) {
  if (max_n < 1) throw DomainError("fib_path_check requires max_n >= 1");
  Evaluator eval;
  const auto path = fib_path_indices(max_n);
  BigInt f = 0;
  BigInt g = 1;
  for (const auto& a : path) {
    if (eval(a) != f) return false;
    BigInt next = f + g;
    f = std::move(g);
    g = std::move(next);
  }
  return true;
}

Factorization fib_square_factorization(std::uint64_t n) {
  if (n < 3) throw DomainError("fib_square_factorization requires n >= 3");
  if (n % 2 == 1) return {fib(n - 1).value, fib(n + 1).value};
  return {fib(n - 2).value, fib(n + 2).value};
}

bool prime_criterion(std::uint64_t n, const Limits& limits) {
  const OccurrenceRecord rec = occurrences_brute(n, limits);
  const std::vector<SeqIndex> expected{BigInt(1) << n, (BigInt(1) << (n + 1)) - 1};
  return rec.indices == expected;
}

}  // namespace regdiv
