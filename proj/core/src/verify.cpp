#include "xysel/verify.hpp"

#include <array>
#include <sstream>

#include "xysel/fj.hpp"
#include "xysel/oracle.hpp"
#include "xysel/rng.hpp"

namespace xysel {

namespace {

std::string reproducer(const Instance& inst) {
  std::ostringstream os;
  os << "seed=" << inst.seed << " m=" << inst.x.size() << " n=" << inst.y.size()
     << " k=" << inst.k;
  return os.str();
}

bool cell_counts_bounded(const SelectRun& run) {
  for (const IterationRow& row : run.iterations)
    if (row.cells_out > 2 * row.l_p) return false;
  return true;
}

}  // namespace

VerifyOutcome run_verify_campaign(const VerifyOptions& options) {
  static constexpr std::array<double, 5> kBiases = {0.0, 0.25, 0.5, 0.9, 1.0};
  VerifyOutcome out;
  Rng seeder(options.seed);
  FjOptions checked;
  checked.check_invariants = true;

  for (std::uint64_t t = 0; t < options.trials; ++t) {
    const Instance inst = gen_instance(seeder.next(), options.max_n, kBiases[t % kBiases.size()]);
    bool good = true;
    try {
      SelectRun co = fj_select_run(inst.x, inst.y, inst.k, nullptr, checked);
      SelectRun naive = naive_fj_select_run(inst.x, inst.y, inst.k, nullptr, checked);
      ExtValue truth = brute_force_kth(inst.x, inst.y, inst.k);
      ExtValue co_value = co.value;
      if (options.fault_period != 0 && (t + 1) % options.fault_period == 0)
        co_value = co_value + ExtValue::finite(1.0);
      good = co_value == truth && naive.value == truth && cell_counts_bounded(co) &&
             cell_counts_bounded(naive);
    } catch (const std::exception&) {
      good = false;
    }
    if (good) {
      ++out.passed;
    } else {
      ++out.failed;
      if (out.first_reproducer.empty()) out.first_reproducer = reproducer(inst);
    }
  }
  return out;
}

}  // namespace xysel
