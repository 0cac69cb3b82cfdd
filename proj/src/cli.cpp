#include "schedgame/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "schedgame/bench.hpp"
#include "schedgame/strategy.hpp"

namespace schedgame {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("write failed on '" + path + "'");
}

void print_metrics(std::ostream& out, const SolveOutcome& outcome) {
  out << "algorithm: " << outcome.algorithm << "\n"
      << "verdict: " << to_string(outcome.verdict) << "\n"
      << "explored nodes: " << outcome.metrics.explored_nodes << "\n"
      << "peak set size: " << outcome.metrics.peak_set_size << "\n"
      << "iterations: " << outcome.iterations << "\n"
      << "wall time ms: " << outcome.metrics.wall_time_ms << "\n";
  if (!outcome.note.empty()) out << "note: " << outcome.note << "\n";
}

int verdict_exit(Verdict v) {
  switch (v) {
  case Verdict::feasible: return 0;
  case Verdict::infeasible: return 1;
  case Verdict::inconclusive: return 3;
  }
  return 3;
}

} // namespace

int cmd_analyze(const std::string& tasks_path, const std::string& algorithm,
                const std::string& certificate_out, const SolveBudget& budget,
                std::ostream& out, std::ostream& err) {
  TaskSet ts;
  try {
    ts = load_task_set(tasks_path);
  } catch (const ParseError& e) {
    err << tasks_path << ": " << e.what() << "\n";
    return 2;
  }
  SolveOutcome outcome;
  try {
    if (algorithm == "bw-tba") outcome = bw_tba_solve(ts, true, budget);
    else if (algorithm == "bw-tba-nofrontier") outcome = bw_tba_solve(ts, false, budget);
    else if (algorithm == "es") outcome = es_solve(ts, budget);
    else {
      err << "unknown algorithm '" << algorithm
          << "' (expected es, bw-tba, or bw-tba-nofrontier)\n";
      return 2;
    }
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << "\n";
    return 2;
  }
  print_metrics(out, outcome);
  if (!certificate_out.empty()) {
    if (outcome.verdict == Verdict::inconclusive) {
      err << "no certificate: verdict is inconclusive\n";
    } else {
      Certificate cert{ts, outcome.verdict == Verdict::feasible, outcome.losing};
      try {
        write_file(certificate_out, serialize_certificate(cert));
        out << "certificate: " << certificate_out << "\n";
      } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
      }
    }
  }
  return verdict_exit(outcome.verdict);
}

int cmd_generate(int count, int n, int cpus, double u, int t_min, int t_max,
                 const std::string& mode_name, uint64_t seed, const std::string& out_dir,
                 std::ostream& out, std::ostream& err) {
  if (count < 0) {
    err << "count must be >= 0\n";
    return 2;
  }
  if (n < 1 || cpus < 1 || !(u > 0.0) || u > static_cast<double>(n) || t_min < 2 ||
      t_max < t_min) {
    err << "need n >= 1, cpus >= 1, 0 < u <= n, 2 <= t-min <= t-max\n";
    return 2;
  }
  DeadlineMode mode;
  try {
    mode = deadline_mode_from_string(mode_name);
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    err << "cannot create '" << out_dir << "': " << ec.message() << "\n";
    return 2;
  }
  for (int idx = 0; idx < count; ++idx) {
    SplitRng rng = SplitRng(seed).child(static_cast<uint64_t>(idx));
    TaskSet ts = generate_instance(n, cpus, u, t_min, t_max, mode, rng);
    std::string path =
        out_dir + "/" + std::to_string(seed) + "_" + std::to_string(idx) + ".tasks";
    try {
      write_file(path, serialize_task_set(ts));
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return 2;
    }
    out << path << "\n";
  }
  return 0;
}

int cmd_bench(const std::string& campaign_path, const std::vector<std::string>& algorithms,
              const std::string& out_csv, const SolveBudget& budget, int parallelism,
              std::ostream& out, std::ostream& err) {
  if (algorithms.empty()) {
    err << "no algorithms selected\n";
    return 2;
  }
  std::vector<ExperimentRecord> rows;
  try {
    Campaign campaign = parse_campaign(read_file(campaign_path));
    rows = run_campaign(campaign, algorithms, budget, parallelism);
  } catch (const ParseError& e) {
    err << campaign_path << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 2;
  }
  std::string csv = to_csv(rows);
  if (out_csv.empty() || out_csv == "-") {
    out << csv;
  } else {
    try {
      write_file(out_csv, csv);
    } catch (const std::exception& e) {
      err << e.what() << "\n";
      return 2;
    }
    out << "wrote " << rows.size() << " rows to " << out_csv << "\n";
  }
  return 0;
}

int cmd_summarize(const std::string& csv_path, std::ostream& out, std::ostream& err) {
  try {
    out << summarize(parse_csv(read_file(csv_path)));
  } catch (const ParseError& e) {
    err << csv_path << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}

int cmd_verify(const std::string& certificate_path, std::ostream& out, std::ostream& err) {
  Certificate cert;
  try {
    cert = parse_certificate(read_file(certificate_path));
  } catch (const ParseError& e) {
    err << certificate_path << ": " << e.what() << "\n";
    return 2;
  }
  VerificationReport report = verify_certificate(cert);
  if (report.ok) {
    out << "ok: " << report.reason << " (" << report.visited << " nodes visited)\n";
    return 0;
  }
  out << "FAIL: " << report.reason << "\n";
  if (!report.counterexample.empty()) out << render_play(report.counterexample);
  return 1;
}

int cmd_simulate_edf(const std::string& tasks_path, const SolveBudget& budget,
                     std::ostream& out, std::ostream& err) {
  TaskSet ts;
  try {
    ts = load_task_set(tasks_path);
  } catch (const ParseError& e) {
    err << tasks_path << ": " << e.what() << "\n";
    return 2;
  }
  SolveOutcome outcome = edf_schedulable(ts, budget);
  print_metrics(out, outcome);
  return verdict_exit(outcome.verdict);
}

} // namespace schedgame
