#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "schedgame/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact feasibility analysis of sporadic task sets on identical "
               "multiprocessors, via a two-player scheduling game"};
  app.require_subcommand(1);

  schedgame::SolveBudget budget;
  uint64_t seed = 1;
  app.add_option("--budget-nodes", budget.max_explored, "Abort after exploring this many nodes")
      ->capture_default_str();
  app.add_option("--budget-seconds", budget.max_seconds,
                 "Abort a solver run after this much wall time (0 = off)")
      ->capture_default_str();
  app.add_option("--seed", seed, "Root seed for generation commands")->capture_default_str();

  auto* analyze = app.add_subcommand("analyze", "Decide feasibility of a task-set file");
  std::string tasks_path, algorithm = "bw-tba", certificate_out;
  analyze->add_option("tasks", tasks_path, "Task-set file")->required();
  analyze->add_option("--algorithm", algorithm, "es, bw-tba, or bw-tba-nofrontier")
      ->capture_default_str();
  analyze->add_option("--certificate", certificate_out, "Write the losing antichain here");

  auto* generate = app.add_subcommand("generate", "Write random task-set files");
  int gen_count = 1, gen_n = 3, gen_cpus = 1, gen_tmin = 2, gen_tmax = 6;
  double gen_u = 1.0;
  std::string gen_mode = "constrained", gen_dir = ".";
  generate->add_option("--count", gen_count, "Number of instances")->capture_default_str();
  generate->add_option("-n,--tasks", gen_n, "Tasks per instance")->capture_default_str();
  generate->add_option("-m,--cpus", gen_cpus, "Processors")->capture_default_str();
  generate->add_option("-u,--utilization", gen_u, "Target total utilization")
      ->capture_default_str();
  generate->add_option("--t-min", gen_tmin, "Smallest period")->capture_default_str();
  generate->add_option("--t-max", gen_tmax, "Largest period")->capture_default_str();
  generate->add_option("--deadline-mode", gen_mode, "implicit, constrained, or arbitrary")
      ->capture_default_str();
  generate->add_option("--out-dir", gen_dir, "Output directory")->capture_default_str();

  auto* bench = app.add_subcommand("bench", "Run a benchmark campaign file");
  std::string campaign_path, out_csv;
  std::vector<std::string> algorithms;
  int parallelism = 0;
  bench->add_option("campaign", campaign_path, "Campaign file")->required();
  bench->add_option("--algorithms", algorithms,
                    "Algorithms to run (es, bw-tba, bw-tba-nofrontier, edf)")
      ->delimiter(',')
      ->required();
  bench->add_option("--out", out_csv, "CSV output path ('-' = stdout)");
  bench->add_option("--parallelism", parallelism, "Worker threads (0 = all cores)")
      ->capture_default_str();

  auto* summarize = app.add_subcommand("summarize", "Digest a benchmark CSV");
  std::string csv_path;
  summarize->add_option("csv", csv_path, "CSV file from bench")->required();

  auto* verify = app.add_subcommand("verify", "Check a certificate file");
  std::string certificate_path;
  verify->add_option("certificate", certificate_path, "Certificate file")->required();

  auto* simulate = app.add_subcommand("simulate-edf", "Test the task set under EDF");
  std::string edf_tasks_path;
  simulate->add_option("tasks", edf_tasks_path, "Task-set file")->required();

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed())
    return schedgame::cmd_analyze(tasks_path, algorithm, certificate_out, budget, std::cout,
                                  std::cerr);
  if (generate->parsed())
    return schedgame::cmd_generate(gen_count, gen_n, gen_cpus, gen_u, gen_tmin, gen_tmax,
                                   gen_mode, seed, gen_dir, std::cout, std::cerr);
  if (bench->parsed())
    return schedgame::cmd_bench(campaign_path, algorithms, out_csv, budget, parallelism,
                                std::cout, std::cerr);
  if (summarize->parsed()) return schedgame::cmd_summarize(csv_path, std::cout, std::cerr);
  if (verify->parsed()) return schedgame::cmd_verify(certificate_path, std::cout, std::cerr);
  if (simulate->parsed())
    return schedgame::cmd_simulate_edf(edf_tasks_path, budget, std::cout, std::cerr);
  return 2;
}
