#include "cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "regdiv/regdiv.hpp"

namespace regdiv::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Options {
  std::uint64_t count = 0;
  std::uint64_t max_m = 0;
  std::uint64_t depth = 0;
  std::uint64_t m = 0;
  std::uint64_t max_n = 0;
  std::string format;
  std::string output;
  bool pairs = false;
  std::optional<std::uint64_t> cap_m;
  std::optional<std::uint64_t> cap_depth;
  std::optional<std::uint64_t> cap_count;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_format(const Options& o, std::initializer_list<const char*> allowed,
                    const char* command) {
  for (const char* f : allowed) {
    if (o.format == f) return;
  }
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError(std::string("format '") + o.format + "' is not valid for " + command +
                   " (allowed: " + list + ")");
}

// Numbers that fit in 64 bits stay JSON numbers; larger ones become strings.
ordered_json json_number(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) {
    return v.convert_to<std::uint64_t>();
  }
  return v.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<BigInt>& values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += sep;
    out += values[i].str();
  }
  return out;
}

int cmd_seq(const Options& o, const Limits& limits, std::ostream& os) {
  require_format(o, {"plain", "csv", "json", "bfile"}, "seq");
  if (o.count < 1) throw UsageError("--count must be >= 1");
  if (o.count > limits.max_count) {
    throw ResourceLimitError("count " + std::to_string(o.count) + " exceeds cap " +
                             std::to_string(limits.max_count));
  }
  if (o.format == "csv") os << "n,s\n";
  if (o.format == "json") os << '[';
  for_each_term(
      o.count,
      [&](std::uint64_t n, const SeqValue& v) {
        if (o.format == "plain") {
          if (n > 1) os << ' ';
          os << v;
        } else if (o.format == "csv") {
          os << n << ',' << v << '\n';
        } else if (o.format == "json") {
          if (n > 1) os << ',';
          os << v;
        } else {
          write_bfile_line(os, n, v);
        }
      },
      limits);
  if (o.format == "plain") os << '\n';
  if (o.format == "json") os << "]\n";
  return kOk;
}

int cmd_verify(const Options& o, const Limits& limits, std::ostream& os) {
  require_format(o, {"plain", "csv", "json"}, "verify");
  const VerificationReport report = verify_theorem(o.max_m, limits);
  if (o.format == "json") {
    os << to_json(report, 2) << '\n';
  } else if (o.format == "csv") {
    os << "m,tau,count,pass\n";
    for (const auto& r : report.records) {
      os << r.m << ',' << r.tau_value << ',' << r.count() << ',' << (r.pass() ? "true" : "false")
         << '\n';
    }
  } else {
    for (const auto& r : report.records) {
      os << "m=" << r.m << " tau=" << r.tau_value << " count=" << r.count()
         << " indices=" << join(r.indices, ",") << ' ' << (r.pass() ? "pass" : "FAIL") << '\n';
    }
    os << "all_pass=" << (report.all_pass ? "true" : "false") << '\n';
  }
  return report.all_pass ? kOk : kMismatch;
}

ordered_json tree_node(const std::vector<std::vector<Pair>>& rows, std::size_t row, std::size_t pos,
                       bool pairs) {
  const Pair& p = rows[row][pos];
  ordered_json node;
  if (pairs) node["d"] = json_number(p.d());
  node["m"] = json_number(p.m());
  node["index"] = json_number((BigInt(1) << row) + pos);
  ordered_json children = ordered_json::array();
  if (row + 1 < rows.size()) {
    children.push_back(tree_node(rows, row + 1, 2 * pos, pairs));
    children.push_back(tree_node(rows, row + 1, 2 * pos + 1, pairs));
  }
  node["children"] = std::move(children);
  return node;
}

int cmd_tree(const Options& o, const Limits& limits, std::ostream& os) {
  require_format(o, {"json", "dot", "plain"}, "tree");
  const auto rows = pair_rows(o.depth, limits);
  auto label = [&](const Pair& p) { return o.pairs ? p.to_string() : p.m().str(); };
  if (o.format == "json") {
    os << tree_node(rows, 0, 0, o.pairs).dump(2) << '\n';
  } else if (o.format == "dot") {
    os << "digraph pairtree {\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        const BigInt index = (BigInt(1) << r) + j;
        os << "  n" << index << " [label=\"" << label(rows[r][j]) << "\"];\n";
      }
    }
    for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
      for (std::size_t j = 0; j < rows[r].size(); ++j) {
        const BigInt index = (BigInt(1) << r) + j;
        os << "  n" << index << " -> n" << 2 * index << " [label=\"L\"];\n";
        os << "  n" << index << " -> n" << 2 * index + 1 << " [label=\"R\"];\n";
      }
    }
    os << "}\n";
  } else {
    for (const auto& row : rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << label(row[j]);
      os << '\n';
    }
  }
  return kOk;
}

int cmd_occurrences(const Options& o, const Limits& limits, std::ostream& os) {
  require_format(o, {"plain", "json"}, "occurrences");
  const OccurrenceRecord brute = occurrences_brute(o.m, limits);
  const OccurrenceRecord constructive = indices_of(o.m, limits.trial_budget);
  const BigInt target = BigInt(o.m) * o.m + 1;
  const DivisorList divs = divisors(target, limits.trial_budget);
  const bool match = brute.indices == constructive.indices && brute.pass();
  const bool prime = divs.divisors.size() == 2;

  if (o.format == "json") {
    ordered_json j;
    j["m"] = o.m;
    j["m2p1"] = json_number(target);
    ordered_json d = ordered_json::array();
    for (const auto& v : divs.divisors) d.push_back(json_number(v));
    j["divisors"] = std::move(d);
    j["tau"] = json_number(brute.tau_value);
    ordered_json bi = ordered_json::array();
    for (const auto& v : brute.indices) bi.push_back(json_number(v));
    j["indices"] = std::move(bi);
    ordered_json ci = ordered_json::array();
    for (const auto& v : constructive.indices) ci.push_back(json_number(v));
    j["tree_indices"] = std::move(ci);
    j["match"] = match;
    j["prime"] = prime;
    os << j.dump(2) << '\n';
  } else {
    os << "m: " << o.m << '\n';
    os << "m^2+1: " << target << '\n';
    os << "divisors: " << join(divs.divisors, " ") << '\n';
    os << "tau: " << brute.tau_value << '\n';
    os << "indices: " << join(brute.indices, " ") << '\n';
    os << "tree indices: " << join(constructive.indices, " ") << '\n';
    os << "match: " << yes_no(match) << '\n';
    if (prime) os << "note: " << target << " is prime\n";
  }
  return match ? kOk : kMismatch;
}

int cmd_fib(const Options& o, std::ostream& os) {
  require_format(o, {"plain", "csv", "json"}, "fib");
  if (o.max_n < 1) throw UsageError("--max-n must be >= 1");
  Evaluator eval;
  const auto path = fib_path_indices(o.max_n);
  bool all_equal = true;
  BigInt f = 0;
  BigInt g = 1;
  if (o.format == "plain") os << "n a(n) s(a(n)) F_n equal\n";
  if (o.format == "csv") os << "n,a,s_a,fib,equal\n";
  if (o.format == "json") os << "[\n";
  for (std::uint64_t n = 1; n <= o.max_n; ++n) {
    const SeqIndex& a = path[n - 1];
    const SeqValue v = eval(a);
    const bool equal = v == f;
    all_equal = all_equal && equal;
    if (o.format == "plain") {
      os << n << ' ' << a << ' ' << v << ' ' << f << ' ' << yes_no(equal) << '\n';
    } else if (o.format == "csv") {
      os << n << ',' << a << ',' << v << ',' << f << ',' << yes_no(equal) << '\n';
    } else {
      // Raw integers: JSON numbers have no width limit.
      os << "  {\"n\": " << n << ", \"a\": " << a << ", \"s_a\": " << v << ", \"fib\": " << f
         << ", \"equal\": " << (equal ? "true" : "false") << '}' << (n < o.max_n ? "," : "")
         << '\n';
    }
    BigInt next = f + g;
    f = std::move(g);
    g = std::move(next);
  }
  if (o.format == "json") os << "]\n";
  return all_equal ? kOk : kMismatch;
}

int cmd_primes(const Options& o, const Limits& limits, std::ostream& os, std::ostream& err) {
  require_format(o, {"plain", "csv", "json"}, "primes");
  if (o.max_n > limits.max_m) {
    throw ResourceLimitError("max_n " + std::to_string(o.max_n) + " exceeds cap " +
                             std::to_string(limits.max_m));
  }
  bool agree = true;
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 0; n <= o.max_n; ++n) {
    const bool by_criterion = prime_criterion(n, limits);
    const bool by_division = is_prime(BigInt(n) * n + 1, limits.trial_budget);
    if (by_criterion != by_division) {
      agree = false;
      err << "mismatch at n=" << n << ": criterion " << yes_no(by_criterion)
          << ", trial division " << yes_no(by_division) << '\n';
    }
    if (by_criterion) hits.push_back(n);
  }
  if (o.format == "csv") os << "n,n2p1\n";
  if (o.format == "json") {
    ordered_json j = ordered_json::array();
    for (auto n : hits) j.push_back({{"n", n}, {"n2p1", n * n + 1}});
    os << j.dump() << '\n';
  } else {
    for (auto n : hits) os << n << (o.format == "csv" ? ',' : ' ') << n * n + 1 << '\n';
  }
  return agree ? kOk : kMismatch;
}

int cmd_plot(const Options& o, const Limits& limits, std::ostream& os) {
  require_format(o, {"svg", "csv", "plain"}, "plot");
  if (o.count < 1) throw UsageError("--count must be >= 1");
  std::vector<std::uint64_t> values;
  values.reserve(std::min(o.count, limits.max_count));
  for_each_term_u64(
      o.count, [&](std::uint64_t, std::uint64_t v) { values.push_back(v); }, limits);
  if (o.format == "svg") {
    os << render_svg_plot(values);
  } else {
    const char sep = o.format == "csv" ? ',' : ' ';
    for (std::size_t i = 0; i < values.size(); ++i) os << i + 1 << sep << values[i] << '\n';
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "plain|csv|json|bfile|dot|svg");
  sub->add_option("--output", o.output, "Write output to PATH instead of stdout");
  sub->add_option("--cap-m", o.cap_m, "Override the max_m cap");
  sub->add_option("--cap-depth", o.cap_depth, "Override the tree depth cap");
  sub->add_option("--cap-count", o.cap_count, "Override the term count cap");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"2-regular sequence whose value counts are tau(m^2+1)", "regdiv"};
  app.require_subcommand(1, 1);

  auto* seq = app.add_subcommand("seq", "Emit s(1..count)");
  seq->add_option("--count", o.count, "Number of terms")->required();
  add_common(seq, o);

  auto* verify = app.add_subcommand("verify", "Compare occurrence counts with tau(m^2+1)");
  verify->add_option("--max-m", o.max_m, "Largest value to check")->required();
  add_common(verify, o);

  auto* tree = app.add_subcommand("tree", "Export the integer pair tree");
  tree->add_option("--depth", o.depth, "Last row to export")->required();
  tree->add_flag("--pairs", o.pairs, "Show full (d,m) pairs instead of m only");
  add_common(tree, o);

  auto* occ = app.add_subcommand("occurrences", "All indices n with s(n) = m");
  occ->add_option("--m", o.m, "Value to look up")->required();
  add_common(occ, o);

  auto* fibc = app.add_subcommand("fib", "Fibonacci path report");
  fibc->add_option("--max-n", o.max_n, "Number of path steps")->required();
  add_common(fibc, o);

  auto* primes = app.add_subcommand("primes", "n with n^2+1 prime, by the occurrence criterion");
  primes->add_option("--max-n", o.max_n, "Largest n")->required();
  add_common(primes, o);

  auto* plot = app.add_subcommand("plot", "Line plot data for s(1..count)");
  plot->add_option("--count", o.count, "Number of terms")->default_val(63);
  add_common(plot, o);

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("regdiv");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const std::map<const CLI::App*, std::string> default_format{
      {seq, "plain"},   {verify, "plain"}, {tree, "json"}, {occ, "plain"},
      {fibc, "plain"}, {primes, "plain"}, {plot, "svg"}};
  const CLI::App* chosen = app.get_subcommands().front();
  if (o.format.empty()) o.format = default_format.at(chosen);

  try {
    Limits limits = Limits::from_env();
    if (o.cap_m) limits.max_m = *o.cap_m;
    if (o.cap_depth) limits.max_depth = *o.cap_depth;
    if (o.cap_count) limits.max_count = *o.cap_count;

    std::ofstream file;
    if (!o.output.empty()) {
      file.open(o.output, std::ios::binary | std::ios::trunc);
      if (!file) throw UsageError("cannot open output file " + o.output);
    }
    std::ostream& os = o.output.empty() ? out : file;

    int code = kOk;
    if (chosen == seq) code = cmd_seq(o, limits, os);
    else if (chosen == verify) code = cmd_verify(o, limits, os);
    else if (chosen == tree) code = cmd_tree(o, limits, os);
    else if (chosen == occ) code = cmd_occurrences(o, limits, os);
    else if (chosen == fibc) code = cmd_fib(o, os);
    else if (chosen == primes) code = cmd_primes(o, limits, os, err);
    else code = cmd_plot(o, limits, os);
    os.flush();
    return code;
  } catch (const UsageError& e) {
    err << "regdiv: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "regdiv: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "regdiv: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const BudgetExceededError& e) {
    err << "regdiv: resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const std::exception& e) {
    err << "regdiv: " << e.what() << '\n';
    return kMismatch;
  }
}

}  // namespace regdiv::cli
