#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "schedgame/solver.hpp"

namespace schedgame {

/// All commands print human output on `out`, diagnostics on `err`, and
/// return the process exit code. Shared codes: 0 success, 2 bad input
/// (parse/usage/IO). Solver commands add 1 = infeasible, 3 = budget
/// exhausted before a verdict.

int cmd_analyze(const std::string& tasks_path, const std::string& algorithm,
                const std::string& certificate_out, const SolveBudget& budget,
                std::ostream& out, std::ostream& err);

int cmd_generate(int count, int n, int cpus, double u, int t_min, int t_max,
                 const std::string& mode_name, uint64_t seed, const std::string& out_dir,
                 std::ostream& out, std::ostream& err);

int cmd_bench(const std::string& campaign_path, const std::vector<std::string>& algorithms,
              const std::string& out_csv, const SolveBudget& budget, int parallelism,
              std::ostream& out, std::ostream& err);

int cmd_summarize(const std::string& csv_path, std::ostream& out, std::ostream& err);

/// Exit 0 when the certificate checks out, 1 with a counterexample play on
/// `out` when it does not, 2 on unreadable or malformed input.
int cmd_verify(const std::string& certificate_path, std::ostream& out, std::ostream& err);

int cmd_simulate_edf(const std::string& tasks_path, const SolveBudget& budget,
                     std::ostream& out, std::ostream& err);

} // namespace schedgame
