#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schedgame/generator.hpp"
#include "schedgame/solver.hpp"

namespace schedgame {

/// One CSV row: the instance parameters plus one algorithm's outcome.
struct ExperimentRecord {
  std::string instance_id;
  int n = 0;
  int m = 0;
  double u_target = 0.0;
  int t_min = 0;
  int t_max = 0;
  DeadlineMode deadline_mode = DeadlineMode::constrained;
  uint64_t seed = 0; // the campaign seed; per-instance seeds derive from it
  std::string algorithm;
  std::string feasible; // "true" | "false" | "inconclusive"
  size_t explored_nodes = 0;
  size_t peak_set_size = 0;
  int iterations = 0;
  double wall_time_ms = 0.0;
};

/// "true" / "false" / "inconclusive".
std::string csv_feasible(Verdict v);

/// One batch of same-shaped instances. u_max = u_min pins the utilization;
/// otherwise each instance draws its target uniformly from [u_min, u_max].
struct CampaignGroup {
  int count = 0;
  int n = 0;
  int m = 1;
  double u_min = 0.0;
  double u_max = 0.0;
  int t_min = 2;
  int t_max = 2;
  DeadlineMode mode = DeadlineMode::constrained;
};

struct Campaign {
  uint64_t seed = 0;
  std::vector<CampaignGroup> groups;
};

/// Campaign file: '#' comments; one `seed <value>` line; then one line per
/// group `group count=<k> n=<n> m=<m> u=<u | lo..hi> tmin=<a> tmax=<b>
/// mode=<implicit|constrained|arbitrary>` with keys in any order.
Campaign parse_campaign(std::string_view text);

/// Run every listed algorithm on every instance of the campaign. Instances
/// are generated deterministically from per-instance child seeds, solved
/// across `parallelism` workers (instance granularity), and rows are
/// ordered by (instance_id, algorithm) regardless of scheduling. Budget
/// overruns become inconclusive rows, never aborts.
std::vector<ExperimentRecord> run_campaign(const Campaign& campaign,
                                           const std::vector<std::string>& algorithms,
                                           const SolveBudget& per_instance_budget = {},
                                           int parallelism = 0);

/// The task set a campaign row/instance denotes, reproduced from the
/// campaign seed. instance_index counts across groups in listing order.
TaskSet instance_for(const Campaign& campaign, int instance_index, double* u_drawn = nullptr);

std::string to_csv(const std::vector<ExperimentRecord>& rows);
std::vector<ExperimentRecord> parse_csv(std::string_view text);

/// Median over instances of explored_nodes(numerator)/explored_nodes(
/// denominator), counting only instances where both rows are conclusive.
/// Returns 0 when no instance qualifies.
double median_explored_ratio(const std::vector<ExperimentRecord>& rows,
                             const std::string& numerator_alg,
                             const std::string& denominator_alg);

/// Human-readable digest: per utilization bucket and algorithm, the share
/// of feasible verdicts; plus explored-node ratios for algorithm pairs that
/// appear together.
std::string summarize(const std::vector<ExperimentRecord>& rows);

} // namespace schedgame
