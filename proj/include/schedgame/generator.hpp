#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "schedgame/tasks.hpp"

namespace schedgame {

/// Deterministic random source for generators and benchmarks.
///
/// The engine is mt19937_64 (fully specified by the standard), and every draw
/// algorithm is coded here rather than delegated to std distributions, so the
/// same seed produces the same values on any platform:
///   - real01():   top 53 bits of one engine output, value in [0, 1)
///   - real01o():  real01() with zero rejected, value in (0, 1)
///   - uniform_int(lo, hi): unbiased via rejection sampling
///   - child(k):   independent stream, seed derived with splitmix64
class SplitRng {
public:
  static constexpr const char* algorithm_name = "mt19937_64";

  explicit SplitRng(uint64_t seed) : seed_(seed), engine_(seed) {}

  uint64_t seed() const { return seed_; }
  uint64_t next_u64() { return engine_(); }

  double real01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double real01o() {
    for (;;) {
      double r = real01();
      if (r > 0.0) return r;
    }
  }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi);

  /// Independent child stream number `k` of this stream.
  SplitRng child(uint64_t k) const;

private:
  uint64_t seed_;
  std::mt19937_64 engine_;
};

/// One splitmix64 step; used for child-seed derivation.
uint64_t splitmix64(uint64_t x);

/// Splits u_total into n positive shares that sum to u_total (within 1e-9):
/// repeatedly splits the remaining utilization as sum * r^(1/(n-i)) with
/// r drawn uniform from (0,1). Requires n >= 1 and u_total > 0.
std::vector<double> uunifast(int n, double u_total, SplitRng& rng);

enum class DeadlineMode { implicit, constrained, arbitrary };

std::string to_string(DeadlineMode mode);
/// Throws std::invalid_argument on unknown names.
DeadlineMode deadline_mode_from_string(std::string_view name);

/// Random instance with target total utilization u_total:
///   - per-task utilizations from uunifast, then entries above 1 are clamped
///     to 1 with the excess redistributed proportionally over the uncapped
///     entries (sum preserved; at u_total = n every entry is forced to 1)
///   - T_i uniform in [t_min, t_max], C_i = max(1, round(u_i * T_i))
///   - D_i = T_i (implicit), uniform in [C_i, T_i] (constrained), or uniform
///     in [C_i, 2*T_i] (arbitrary)
/// Draw order is fixed (utilizations first, then per task T then D), so one
/// (arguments, seed) pair maps to exactly one task set.
/// Requires n >= 1, 0 < u_total <= n, 2 <= t_min <= t_max.
TaskSet generate_instance(int n, int cpus, double u_total, int t_min, int t_max,
                          DeadlineMode mode, SplitRng& rng);

} // namespace schedgame
