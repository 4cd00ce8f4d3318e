#ifndef XYSEL_VERIFY_HPP
#define XYSEL_VERIFY_HPP

#include <cstdint>
#include <string>

namespace xysel {

struct VerifyOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_n = 64;
  /// Test fixture: perturb the scan-friendly result on every Nth trial
  /// so the harness can prove it reports mismatches. 0 disables.
  std::uint64_t fault_period = 0;
};

struct VerifyOutcome {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// "seed=... m=... n=... k=..." for the first mismatch, empty if none.
  std::string first_reproducer;

  bool ok() const { return failed == 0; }
};

/// Random-instance campaign: both selection variants against the brute
/// force oracle, with structural invariants checked every iteration and
/// the active-cell growth bound enforced on every trace.
VerifyOutcome run_verify_campaign(const VerifyOptions& options);

}  // namespace xysel

#endif  // XYSEL_VERIFY_HPP
