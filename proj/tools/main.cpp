// Command-line front end: select on file data, verify against the brute
// force oracle, sweep IO benchmarks to CSV, and dump the permuted views.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <bit>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xysel/fj.hpp"
#include "xysel/oracle.hpp"
#include "xysel/permute.hpp"
#include "xysel/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<double> parse_values(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError(path + ": cannot open");
  std::vector<double> values;
  std::string token;
  while (in >> token) {
    std::istringstream ts(token);
    double v;
    if (!(ts >> v) || !ts.eof())
      throw UsageError(path + ": cannot parse token " + std::to_string(values.size() + 1) +
                       " ('" + token + "')");
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(path + ": no values");
  return values;
}

xysel::SortedInput load_input(const std::string& path) {
  try {
    return xysel::SortedInput(parse_values(path));
  } catch (const xysel::SortednessError& e) {
    throw UsageError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::string format_value(xysel::ExtValue v) {
  if (!v.is_finite()) return "inf";
  std::ostringstream os;
  os << std::setprecision(17) << v.raw();
  return os.str();
}

int cmd_select(const std::string& x_path, const std::string& y_path, std::uint64_t k,
               bool verbose) {
  // Validate each file separately so errors name the right one, then
  // rebuild the pair with its shared padded length.
  const xysel::SortedInput x_alone = load_input(x_path);
  const xysel::SortedInput y_alone = load_input(y_path);
  auto [x, y] = xysel::SortedInput::make_pair(x_alone.values(), y_alone.values());

  xysel::SelectRun run;
  try {
    run = xysel::fj_select_run(x, y, k);
  } catch (const std::out_of_range&) {
    throw UsageError("k=" + std::to_string(k) + " out of range (1.." +
                     std::to_string(x.size() * y.size()) + ")");
  }
  if (verbose) {
    for (const xysel::IterationRow& row : run.iterations) {
      std::cout << "p=" << row.p << " cells=" << row.cells_in << " split=" << row.cells_split
                << " L=" << row.l_p << " q=" << row.q
                << (row.upper_applied ? "" : " (skipped)") << " r=" << row.r
                << " k=" << row.k_after << " kept=" << row.cells_out << "\n";
    }
  }
  std::cout << format_value(run.value) << "\n";
  return kExitOk;
}

int cmd_verify(std::uint64_t trials, std::uint64_t seed, std::size_t max_n,
               std::uint64_t fault_period) {
  xysel::VerifyOptions options;
  options.trials = trials;
  options.seed = seed;
  options.max_n = max_n;
  options.fault_period = fault_period;
  const xysel::VerifyOutcome outcome = xysel::run_verify_campaign(options);
  std::cout << "trials: " << trials << " passed: " << outcome.passed
            << " failed: " << outcome.failed << "\n";
  if (!outcome.ok()) {
    std::cout << "reproducer: " << outcome.first_reproducer << "\n";
    return kExitVerifyFailure;
  }
  return kExitOk;
}

int cmd_bench(const std::vector<std::size_t>& n_list, const std::vector<std::uint64_t>& b_list,
              const std::vector<std::uint64_t>& m_list, const std::vector<std::string>& algos,
              const std::string& csv_path, std::uint64_t k_override, std::uint64_t seed) {
  for (const std::string& a : algos)
    if (a != "co" && a != "naive") throw UsageError("unknown algo '" + a + "'");
  for (std::uint64_t b : b_list)
    for (std::uint64_t m : m_list)
      if (m < 2 * b)
        throw UsageError("M=" + std::to_string(m) + " is smaller than 2*B with B=" +
                         std::to_string(b));

  std::ofstream file;
  const bool to_stdout = csv_path == "-";
  if (!to_stdout) {
    file.open(csv_path);
    if (!file) throw UsageError(csv_path + ": cannot open for writing");
  }
  std::ostream& csv = to_stdout ? std::cout : file;
  csv << "algo,n,k,B,M,accesses,misses,elapsed_ns,result\n";

  std::size_t rows = 0;
  for (std::size_t n : n_list) {
    const xysel::Instance inst = xysel::make_square_instance(n, seed);
    const std::uint64_t k = k_override != 0 ? k_override : inst.k;
    for (const std::string& algo : algos) {
      for (std::uint64_t b : b_list) {
        for (std::uint64_t m : m_list) {
          xysel::IoSession session;
          xysel::SimulatedCache cache(xysel::CacheConfig{b, m});
          session.attach(cache);
          const auto start = std::chrono::steady_clock::now();
          const xysel::ExtValue result =
              algo == "co" ? xysel::fj_select(inst.x, inst.y, k, &session)
                           : xysel::naive_fj_select(inst.x, inst.y, k, &session);
          const auto stop = std::chrono::steady_clock::now();
          const auto ns =
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
          csv << algo << ',' << n << ',' << k << ',' << b << ',' << m << ','
              << cache.accesses() << ',' << cache.misses() << ',' << ns << ','
              << format_value(result) << "\n";
          ++rows;
        }
      }
    }
  }
  if (!to_stdout) std::cout << "wrote " << rows << " rows to " << csv_path << "\n";
  return kExitOk;
}

int cmd_permute(const std::string& x_path) {
  const xysel::SortedInput x = load_input(x_path);
  const std::size_t n = x.padded_len();
  if (n < 4) {
    std::cout << "no meaningful slots (padded length " << n << ")\n";
    return kExitOk;
  }
  std::vector<xysel::ExtValue> plain(n), shifted(n);
  for (std::size_t i = 0; i < n; ++i) plain[i] = x.logical_at(i);
  shifted[0] = xysel::ExtValue::pos_inf();
  for (std::size_t i = 1; i < n; ++i) shifted[i] = x.logical_at(i - 1);
  const std::vector<xysel::ExtValue> x1 = xysel::pbr(std::move(plain));
  const std::vector<xysel::ExtValue> x2 = xysel::pbr(std::move(shifted));

  for (std::size_t t = 1; t < n / 2; ++t) {
    const std::uint32_t p = static_cast<std::uint32_t>(std::bit_width(t));
    const std::size_t i = t - (std::size_t{1} << (p - 1)) + 1;
    const std::size_t source = (2 * i - 1) * (n >> p);
    std::cout << "X1[" << t << "] = X[" << source << "] = " << format_value(x1[t]) << "\n";
  }
  for (std::size_t t = 1; t < n / 2; ++t) {
    const std::uint32_t p = static_cast<std::uint32_t>(std::bit_width(t));
    const std::size_t i = t - (std::size_t{1} << (p - 1)) + 1;
    const std::size_t source = (2 * i - 1) * (n >> p) - 1;
    std::cout << "X2[" << t << "] = X[" << source << "] = " << format_value(x2[t]) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selection in sorted X+Y matrices, with an external-memory cost probe"};
  app.require_subcommand(1);

  std::string x_path, y_path, csv_path = "-";
  std::uint64_t k = 0, trials = 1000, seed = 42, fault_period = 0, bench_k = 0;
  std::size_t max_n = 64;
  bool verbose = false;
  std::vector<std::size_t> n_list;
  std::vector<std::uint64_t> b_list{64}, m_list{4096};
  std::vector<std::string> algos{"co", "naive"};

  CLI::App* select = app.add_subcommand("select", "Select the kth smallest of X[i]+Y[j]");
  select->add_option("x", x_path, "File of nondecreasing X values")->required();
  select->add_option("y", y_path, "File of nondecreasing Y values")->required();
  select->add_option("k", k, "Rank, 1-based")->required()->check(CLI::PositiveNumber);
  select->add_flag("-v,--verbose", verbose, "Print per-iteration diagnostics");

  CLI::App* verify = app.add_subcommand("verify", "Random campaign against the oracle");
  verify->add_option("--trials", trials, "Number of random instances")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "Campaign seed");
  verify->add_option("--max-n", max_n, "Maximum array length")->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault_period, "Perturb every Nth result (self-test)")
      ->group("");

  CLI::App* bench = app.add_subcommand("bench", "Instrumented sweep, CSV output");
  bench->add_option("--n", n_list, "Array lengths")->required()->delimiter(',');
  bench->add_option("--B", b_list, "Block sizes in words")->delimiter(',');
  bench->add_option("--M", m_list, "Cache capacities in words")->delimiter(',');
  bench->add_option("--algo", algos, "Algorithms: co, naive")->delimiter(',');
  bench->add_option("--csv", csv_path, "Output path, '-' for stdout");
  bench->add_option("--k", bench_k, "Rank override (default: median)");
  bench->add_option("--seed", seed, "Instance seed");

  CLI::App* permute = app.add_subcommand("permute", "Dump the permuted views of one array");
  permute->add_option("x", x_path, "File of nondecreasing values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (select->parsed()) return cmd_select(x_path, y_path, k, verbose);
    if (verify->parsed()) return cmd_verify(trials, seed, max_n, fault_period);
    if (bench->parsed())
      return cmd_bench(n_list, b_list, m_list, algos, csv_path, bench_k, seed);
    if (permute->parsed()) return cmd_permute(x_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
