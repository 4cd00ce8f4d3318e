// Acceptance suite: one gate per shipped guarantee, one PASS/FAIL line
// each. Run with no arguments for everything, with a number for a single
// criterion, or with --calibrate to print the raw measurements behind
// the frozen bounds in tests/frozen_bounds.hpp.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifdef __GLIBC__
#include <malloc.h>
#endif

#include "../frozen_bounds.hpp"
#include "xysel/fj.hpp"
#include "xysel/oracle.hpp"
#include "xysel/permute.hpp"
#include "xysel/rng.hpp"
#include "xysel/select.hpp"
#include "xysel/verify.hpp"

using namespace xysel;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct MissRow {
  std::size_t n;
  std::uint64_t misses;
};

std::uint64_t co_misses(std::size_t n, const CacheConfig& config) {
  const Instance inst = make_square_instance(n, xysel_bounds::kBenchSeed);
  IoSession session;
  SimulatedCache cache(config);
  session.attach(cache);
  fj_select(inst.x, inst.y, inst.k, &session);
  return cache.misses();
}

// --- criterion 1 -----------------------------------------------------

bool criterion_correctness(std::ostream& log) {
  const auto start = Clock::now();
  VerifyOptions options;  // 1000 trials, seed 42, max_n 64
  const VerifyOutcome outcome = run_verify_campaign(options);
  if (!outcome.ok()) {
    log << "campaign failed " << outcome.failed << "/1000, reproducer "
        << outcome.first_reproducer;
    return false;
  }

  std::uint64_t checked = 0;
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::uint64_t variant = 0; variant < 3; ++variant) {
        Rng rng(900 * m + 30 * n + variant);
        std::vector<double> xv, yv;
        for (std::size_t i = 0; i < m; ++i)
          xv.push_back(static_cast<double>(rng.uniform_int(-50, 50)));
        for (std::size_t i = 0; i < n; ++i)
          yv.push_back(static_cast<double>(rng.uniform_int(-50, 50)));
        std::sort(xv.begin(), xv.end());
        std::sort(yv.begin(), yv.end());
        auto [x, y] = SortedInput::make_pair(std::move(xv), std::move(yv));
        for (std::uint64_t k = 1; k <= m * n; ++k) {
          const ExtValue want = brute_force_kth(x, y, k);
          if (fj_select(x, y, k) != want || naive_fj_select(x, y, k) != want) {
            log << "exhaustive sweep mismatch at m=" << m << " n=" << n << " k=" << k;
            return false;
          }
          ++checked;
        }
      }
    }
  }
  log << "1000/1000 trials, exhaustive sweep of " << checked << " ranks, "
      << seconds_since(start) << "s";
  return true;
}

// --- criterion 2 -----------------------------------------------------

bool criterion_pbr_identity(std::ostream& log) {
  const auto start = Clock::now();
  for (std::uint32_t t = 0; t <= 12; ++t) {
    const std::size_t n = std::size_t{1} << t;
    std::vector<ExtValue> z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = ExtValue::finite(static_cast<double>(i));
    const std::vector<ExtValue> out = pbr(std::move(z));
    for (std::uint32_t p = 1; (std::size_t{1} << p) < n; ++p) {
      for (std::size_t i = 1; i <= (std::size_t{1} << (p - 1)); ++i) {
        const std::size_t slot = (std::size_t{1} << (p - 1)) + i - 1;
        const std::size_t source = (2 * i - 1) * (n >> p);
        if (out[slot] != ExtValue::finite(static_cast<double>(source))) {
          log << "slot identity broken at n=" << n << " p=" << p << " i=" << i;
          return false;
        }
      }
    }
  }
  log << "all sizes to 2^12, " << seconds_since(start) << "s";
  return true;
}

// --- criterion 3 -----------------------------------------------------

bool criterion_beta_consistency(std::ostream& log) {
  const auto start = Clock::now();
  std::uint64_t checked = 0;
  for (std::uint32_t t = 2; t <= 12; ++t) {
    const std::size_t n = std::size_t{1} << t;
    // One full-length input and one that exercises the padded tail.
    for (const std::size_t len : {n, n - n / 4 + 1}) {
      std::vector<double> raw;
      for (std::size_t i = 0; i < len; ++i) raw.push_back(static_cast<double>(2 * i + 1));
      const SortedInput x(raw, n);
      const SortedInput y(raw, n);
      const PermutedViews views = build_views(x, y);
      for (std::uint32_t p = 1; (std::size_t{1} << p) < n; ++p) {
        for (std::size_t i = 1; i <= (std::size_t{1} << (p - 1)); ++i) {
          const std::size_t j = (2 * i - 1) * (n >> p);
          if (views.x1.raw()[beta1(j, p, n)] != x.logical_at(j) ||
              views.x2.raw()[beta2(j - 1, p, n)] != x.logical_at(j - 1)) {
            log << "beta mismatch at n=" << n << " len=" << len << " p=" << p << " i=" << i;
            return false;
          }
          ++checked;
        }
      }
    }
  }
  log << checked << " (p,i) pairs, " << seconds_since(start) << "s";
  return true;
}

// --- criteria 4 and 5 ------------------------------------------------

bool linear_fit_holds(const std::vector<MissRow>& rows, std::uint64_t b, double factor,
                      std::ostream& log) {
  for (const MissRow& row : rows) {
    const double budget =
        factor * (static_cast<double>(row.n) / static_cast<double>(b) +
                  static_cast<double>(std::bit_width(row.n) - 1));
    if (static_cast<double>(row.misses) > budget) {
      log << "misses(" << row.n << ")=" << row.misses << " exceeds " << budget
          << " at B=" << b << "; ";
      return false;
    }
  }
  const double ratio = static_cast<double>(rows.back().misses) /
                       static_cast<double>(rows[rows.size() - 2].misses);
  if (ratio < 1.6 || ratio > 2.4) {
    log << "doubling ratio " << ratio << " outside [1.6, 2.4] at B=" << b << "; ";
    return false;
  }
  log << "B=" << b << " ratio " << ratio << "; ";
  return true;
}

const std::vector<std::size_t>& sweep_sizes() {
  static const std::vector<std::size_t> sizes{1u << 12, 1u << 13, 1u << 14, 1u << 15, 1u << 16};
  return sizes;
}

bool criterion_io_linearity(std::ostream& log) {
  std::vector<MissRow> rows;
  for (const std::size_t n : sweep_sizes())
    rows.push_back(MissRow{n, co_misses(n, CacheConfig{64, 4096})});
  return linear_fit_holds(rows, 64, xysel_bounds::kCoMissFactorB64, log);
}

bool criterion_cache_obliviousness(std::ostream& log) {
  // One run per size; three cache geometries watch the same trace.
  std::vector<MissRow> rows16, rows64, rows256;
  for (const std::size_t n : sweep_sizes()) {
    const Instance inst = make_square_instance(n, xysel_bounds::kBenchSeed);
    IoSession session;
    SimulatedCache c16(CacheConfig{16, 16 * 64});
    SimulatedCache c64(CacheConfig{64, 64 * 64});
    SimulatedCache c256(CacheConfig{256, 256 * 64});
    session.attach(c16);
    session.attach(c64);
    session.attach(c256);
    fj_select(inst.x, inst.y, inst.k, &session);
    rows16.push_back(MissRow{n, c16.misses()});
    rows64.push_back(MissRow{n, c64.misses()});
    rows256.push_back(MissRow{n, c256.misses()});
  }
  bool ok = linear_fit_holds(rows16, 16, xysel_bounds::kCoMissFactorB16, log);
  ok = linear_fit_holds(rows64, 64, xysel_bounds::kCoMissFactorB64, log) && ok;
  ok = linear_fit_holds(rows256, 256, xysel_bounds::kCoMissFactorB256, log) && ok;
  return ok;
}

// --- criterion 6 -----------------------------------------------------

bool criterion_naive_separation(std::ostream& log) {
  const std::size_t n = 1u << 16;
  const Instance inst = make_square_instance(n, xysel_bounds::kBenchSeed);
  const CacheConfig config{64, 4096};

  IoSession co_session;
  SimulatedCache co_cache(config);
  co_session.attach(co_cache);
  const ExtValue co_value = fj_select(inst.x, inst.y, inst.k, &co_session);

  IoSession naive_session;
  SimulatedCache naive_cache(config);
  naive_session.attach(naive_cache);
  const ExtValue naive_value = naive_fj_select(inst.x, inst.y, inst.k, &naive_session);

  if (co_value != naive_value) {
    log << "variants disagree";
    return false;
  }
  const double ratio =
      static_cast<double>(naive_cache.misses()) / static_cast<double>(co_cache.misses());
  log << "naive=" << naive_cache.misses() << " co=" << co_cache.misses() << " ratio=" << ratio;
  return ratio >= 3.0;
}

// --- criterion 7 -----------------------------------------------------

bool criterion_select_io(std::ostream& log) {
  Rng rng(xysel_bounds::kBenchSeed);
  for (const std::size_t s : {std::size_t{1} << 10, std::size_t{1} << 14}) {
    std::vector<KeyedItem> data;
    data.reserve(s);
    for (std::size_t i = 0; i < s; ++i)
      data.push_back(
          KeyedItem{ExtValue::finite(static_cast<double>(rng.uniform_int(-1000000, 1000000))), i});
    for (const std::uint64_t b : {4u, 16u, 64u}) {
      IoSession session;
      SimulatedCache cache(CacheConfig{b, 8 * b});
      session.attach(cache);
      KeyedBuffer items(&session, "items", data);
      select_kth(items, (s + 1) / 2, &session);
      const double budget = xysel_bounds::kSelectScanFactor *
                            (1.0 + static_cast<double>(s) / static_cast<double>(b));
      if (static_cast<double>(cache.misses()) > budget) {
        log << "s=" << s << " B=" << b << " misses=" << cache.misses() << " > " << budget;
        return false;
      }
    }
  }
  log << "within " << xysel_bounds::kSelectScanFactor << "x scan budget";
  return true;
}

// --- criterion 8 -----------------------------------------------------

bool criterion_active_cell_bound(std::ostream& log) {
  Rng rng(4242);
  std::uint64_t rows_checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = gen_instance(rng.next(), 64, (trial % 4) * 0.3);
    for (const bool use_views : {true, false}) {
      const SelectRun run = use_views ? fj_select_run(inst.x, inst.y, inst.k)
                                      : naive_fj_select_run(inst.x, inst.y, inst.k);
      for (const IterationRow& row : run.iterations) {
        if (row.cells_out > 2 * row.l_p) {
          log << "|C_{p+1}| = " << row.cells_out << " > 2*L_p = " << 2 * row.l_p
              << " at p=" << row.p << " (seed " << inst.seed << ")";
          return false;
        }
        ++rows_checked;
      }
    }
  }
  log << rows_checked << " iteration rows bounded";
  return true;
}

// --- criterion 9 -----------------------------------------------------

double median_runtime_seconds(const Instance& inst) {
  std::vector<double> times;
  fj_select(inst.x, inst.y, inst.k);  // warm allocator and page cache
  for (int rep = 0; rep < 5; ++rep) {
    const auto start = Clock::now();
    fj_select(inst.x, inst.y, inst.k);
    times.push_back(seconds_since(start));
  }
  std::sort(times.begin(), times.end());
  return times[times.size() / 2];
}

bool criterion_linear_time(std::ostream& log) {
  const Instance half = make_square_instance(1u << 19, xysel_bounds::kBenchSeed);
  const Instance full = make_square_instance(1u << 20, xysel_bounds::kBenchSeed);
  const double t_half = median_runtime_seconds(half);
  const double t_full = median_runtime_seconds(full);
  const double ratio = t_full / t_half;
  log << "t(2^19)=" << t_half << "s t(2^20)=" << t_full << "s ratio=" << ratio;
  return ratio <= 2.6;
}

// --- calibration -----------------------------------------------------

void calibrate() {
  std::cout << "select_kth misses / (1 + s/B):\n";
  double select_worst = 0;
  Rng rng(xysel_bounds::kBenchSeed);
  for (const std::size_t s : {std::size_t{1} << 10, std::size_t{1} << 14}) {
    std::vector<KeyedItem> data;
    for (std::size_t i = 0; i < s; ++i)
      data.push_back(
          KeyedItem{ExtValue::finite(static_cast<double>(rng.uniform_int(-1000000, 1000000))), i});
    for (const std::uint64_t b : {4u, 16u, 64u}) {
      IoSession session;
      SimulatedCache cache(CacheConfig{b, 8 * b});
      session.attach(cache);
      KeyedBuffer items(&session, "items", data);
      select_kth(items, (s + 1) / 2, &session);
      const double f = static_cast<double>(cache.misses()) /
                       (1.0 + static_cast<double>(s) / static_cast<double>(b));
      select_worst = std::max(select_worst, f);
      std::cout << "  s=" << s << " B=" << b << " misses=" << cache.misses() << " factor=" << f
                << "\n";
    }
  }
  std::cout << "  -> worst " << select_worst << ", frozen kSelectScanFactor = "
            << 1.5 * select_worst << "\n\n";

  std::cout << "pbr misses / (1 + s/B):\n";
  double pbr_worst = 0;
  for (const std::size_t s : {std::size_t{256}, std::size_t{4096}}) {
    for (const std::uint64_t b : {4u, 16u, 64u}) {
      for (const std::uint64_t blocks : {3u, 8u}) {
        IoSession session;
        SimulatedCache cache(CacheConfig{b, blocks * b});
        session.attach(cache);
        std::vector<ExtValue> data(s);
        for (std::size_t i = 0; i < s; ++i) data[i] = ExtValue::finite(static_cast<double>(i));
        ValueBuffer z(&session, "z", std::move(data));
        pbr(z, &session);
        const double f = static_cast<double>(cache.misses()) /
                         (1.0 + static_cast<double>(s) / static_cast<double>(b));
        pbr_worst = std::max(pbr_worst, f);
        std::cout << "  s=" << s << " B=" << b << " M=" << blocks * b
                  << "B misses=" << cache.misses() << " factor=" << f << "\n";
      }
    }
  }
  std::cout << "  -> worst " << pbr_worst << ", frozen kPbrScanFactor = " << 1.5 * pbr_worst
            << "\n\n";

  std::cout << "scan-friendly selection sweep (M = 64 blocks):\n";
  for (const std::uint64_t b : {16u, 64u, 256u}) {
    std::uint64_t base_misses = 0;
    for (const std::size_t n : sweep_sizes()) {
      const std::uint64_t misses = co_misses(n, CacheConfig{b, 64 * b});
      if (n == sweep_sizes().front()) base_misses = misses;
      std::cout << "  B=" << b << " n=" << n << " misses=" << misses << " per-(n/B+lgn)="
                << static_cast<double>(misses) /
                       (static_cast<double>(n) / static_cast<double>(b) +
                        static_cast<double>(std::bit_width(n) - 1))
                << "\n";
    }
    const double c_raw = static_cast<double>(base_misses) /
                         (static_cast<double>(sweep_sizes().front()) / static_cast<double>(b) +
                          12.0);
    std::cout << "  -> B=" << b << " calibrated at n=2^12: " << c_raw << ", frozen x1.5 = "
              << 1.5 * c_raw << "\n";
  }
  std::cout << "\nnaive vs scan-friendly at n=2^16, B=64, M=4096:\n";
  std::ostringstream scratch;
  criterion_naive_separation(scratch);
  std::cout << "  " << scratch.str() << "\n";
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::ostream&)> run;
};

}  // namespace

int main(int argc, char** argv) {
#ifdef __GLIBC__
  // Let freed iteration buffers be reused instead of returned to the
  // kernel; otherwise page zeroing dominates the timed runs.
  mallopt(M_MMAP_THRESHOLD, 1 << 30);
  mallopt(M_TRIM_THRESHOLD, 1 << 30);
#endif
  const std::vector<Criterion> criteria{
      {1, "correctness vs oracle", criterion_correctness},
      {2, "partial bit-reversal identity", criterion_pbr_identity},
      {3, "beta index consistency", criterion_beta_consistency},
      {4, "IO linearity of the scan-friendly driver", criterion_io_linearity},
      {5, "cache-obliviousness across block sizes", criterion_cache_obliviousness},
      {6, "naive baseline separation", criterion_naive_separation},
      {7, "selection subroutine IO", criterion_select_io},
      {8, "active-cell growth bound", criterion_active_cell_bound},
      {9, "linear running time", criterion_linear_time},
  };

  int only = 0;
  if (argc > 1) {
    const std::string arg = argv[1];
    if (arg == "--calibrate") {
      calibrate();
      return 0;
    }
    only = std::stoi(arg);
  }

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::ostringstream detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.name
              << " (" << detail.str() << ")" << std::endl;
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
