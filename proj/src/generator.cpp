#include "schedgame/generator.hpp"

#include <cmath>
#include <stdexcept>

namespace schedgame {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

int SplitRng::uniform_int(int lo, int hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: empty range");
  uint64_t span = static_cast<uint64_t>(hi) - static_cast<uint64_t>(lo) + 1;
  // Rejection sampling over the largest multiple of span below 2^64.
  uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (;;) {
    uint64_t r = next_u64();
    if (r < limit) return lo + static_cast<int>(r % span);
  }
}

SplitRng SplitRng::child(uint64_t k) const {
  return SplitRng(splitmix64(seed_ + (k + 1) * 0x9E3779B97F4A7C15ULL));
}

std::vector<double> uunifast(int n, double u_total, SplitRng& rng) {
  if (n < 1) throw std::invalid_argument("uunifast: n must be positive");
  if (!(u_total > 0.0)) throw std::invalid_argument("uunifast: utilization must be positive");
  std::vector<double> u(static_cast<size_t>(n));
  double sum = u_total;
  for (int i = 0; i < n - 1; ++i) {
    double next = sum * std::pow(rng.real01o(), 1.0 / (n - 1 - i));
    u[static_cast<size_t>(i)] = sum - next;
    sum = next;
  }
  u[static_cast<size_t>(n - 1)] = sum;
  return u;
}

std::string to_string(DeadlineMode mode) {
  switch (mode) {
  case DeadlineMode::implicit: return "implicit";
  case DeadlineMode::constrained: return "constrained";
  case DeadlineMode::arbitrary: return "arbitrary";
  }
  return "?";
}

DeadlineMode deadline_mode_from_string(std::string_view name) {
  if (name == "implicit") return DeadlineMode::implicit;
  if (name == "constrained") return DeadlineMode::constrained;
  if (name == "arbitrary") return DeadlineMode::arbitrary;
  throw std::invalid_argument("unknown deadline mode '" + std::string(name) + "'");
}

namespace {

// Clamps entries above `cap` and hands the excess proportionally to the
// entries still below it. Terminates: the capped set only grows.
void cap_and_redistribute(std::vector<double>& u, double cap) {
  for (;;) {
    double excess = 0.0;
    double free_sum = 0.0;
    for (double x : u) {
      if (x > cap) excess += x - cap;
      else if (x < cap) free_sum += x; // entries at cap neither give nor take
    }
    if (excess <= 1e-12) return;
    for (double& x : u)
      if (x > cap) x = cap;
    if (free_sum <= 0.0) return; // everything at cap; u_total == n * cap
    for (double& x : u)
      if (x < cap) x += excess * (x / free_sum);
  }
}

} // namespace

TaskSet generate_instance(int n, int cpus, double u_total, int t_min, int t_max,
                          DeadlineMode mode, SplitRng& rng) {
  if (n < 1) throw std::invalid_argument("generate_instance: n must be positive");
  if (cpus < 1) throw std::invalid_argument("generate_instance: cpus must be positive");
  if (!(u_total > 0.0)) throw std::invalid_argument("generate_instance: utilization must be positive");
  if (u_total > static_cast<double>(n) + 1e-9)
    throw std::invalid_argument("generate_instance: utilization exceeds task count");
  if (t_min < 2) throw std::invalid_argument("generate_instance: t_min must be at least 2");
  if (t_min > t_max) throw std::invalid_argument("generate_instance: empty period range");

  std::vector<double> u = uunifast(n, u_total, rng);
  cap_and_redistribute(u, 1.0);

  TaskSet ts;
  ts.cpus = cpus;
  ts.tasks.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    SporadicTask t;
    t.min_interarrival = rng.uniform_int(t_min, t_max);
    long long c = std::llround(u[static_cast<size_t>(i)] * t.min_interarrival);
    t.wcet = static_cast<int>(std::max(1LL, c));
    if (t.wcet > t.min_interarrival) t.wcet = t.min_interarrival; // round-up at u ~ 1
    switch (mode) {
    case DeadlineMode::implicit:
      t.deadline = t.min_interarrival;
      break;
    case DeadlineMode::constrained:
      t.deadline = rng.uniform_int(t.wcet, t.min_interarrival);
      break;
    case DeadlineMode::arbitrary:
      t.deadline = rng.uniform_int(t.wcet, 2 * t.min_interarrival);
      break;
    }
    ts.tasks.push_back(t);
  }
  validate(ts);
  return ts;
}

} // namespace schedgame
