// Acceptance gate: ten checks, one PASS/FAIL line each, nonzero exit when
// any fails. Thresholds and campaign shapes are pinned as constants below;
// every randomized check runs from a fixed master seed, so each verdict
// here is reproducible bit for bit.

#include <sys/wait.h>

#include <chrono>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schedgame/bench.hpp"
#include "schedgame/cli.hpp"
#include "schedgame/generator.hpp"
#include "schedgame/solver.hpp"
#include "schedgame/strategy.hpp"

using namespace schedgame;

namespace {

constexpr uint64_t kMasterSeed = 20260822;

constexpr double kRunningExampleSecondsMax = 1.0; // check 1
constexpr int kOracleInstances = 200;             // checks 3, 4, 10
constexpr double kOracleSecondsMax = 600.0;       // check 3
constexpr int kBadInstances = 100;                // check 5
constexpr int kSimInstances = 20;                 // check 6
constexpr int kSimPairsPerInstance = 600;
constexpr size_t kSimPairsMin = 10000;
constexpr int kLawInstances = 12; // check 7
constexpr size_t kLawSpaceMax = 5000;
constexpr int kLawTriples = 2000;
constexpr int kLawSubsets = 10;
constexpr int kLawTargets = 10;
constexpr double kPerfMedianMin = 3.0; // check 8
constexpr int kMutationCerts = 25;     // check 10

const char* kRunningExampleTasks = "task 1 1 2\ntask 2 2 2\ntask 1 4 2\n";

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

DeadlineMode mode_cycle(int j) {
  switch (j % 3) {
  case 0: return DeadlineMode::implicit;
  case 1: return DeadlineMode::constrained;
  default: return DeadlineMode::arbitrary;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The shared small-instance corpus for checks 3, 4 and 10. Sizes stay
// within the full-space oracle's reach: n <= 3, periods <= 6, m <= 2.
std::vector<TaskSet> oracle_corpus() {
  std::vector<TaskSet> out;
  out.reserve(kOracleInstances);
  for (int k = 0; k < kOracleInstances; ++k) {
    SplitRng rng = SplitRng(kMasterSeed).child(static_cast<uint64_t>(k));
    int n = 1 + k % 3;
    int m = 1 + (k / 3) % 2;
    int t_max = rng.uniform_int(2, 6);
    double u = n * (0.15 + 0.85 * rng.real01());
    out.push_back(generate_instance(n, m, u, 2, t_max, mode_cycle(k / 6), rng));
  }
  return out;
}

std::vector<GameNode> successors(const GameNode& v, const TaskSet& ts) {
  std::vector<GameNode> out;
  if (v.owner == Owner::scheduler) {
    for (const Move& x : scheduler_moves(v, ts))
      out.push_back({succ_scheduler(v.state, x, ts), Owner::tasks});
  } else {
    for (const Move& r : task_moves(v, ts))
      out.push_back({succ_tasks(v.state, r, ts), Owner::scheduler});
  }
  return out;
}

Outcome criterion_running_example() {
  TaskSet two = parse_task_set(std::string("cpus 2\n") + kRunningExampleTasks);
  TaskSet one = parse_task_set(std::string("cpus 1\n") + kRunningExampleTasks);
  double slowest = 0.0;
  auto run = [&](const TaskSet& ts, bool backward, Verdict want, const char* what) {
    auto t0 = std::chrono::steady_clock::now();
    SolveOutcome r = backward ? bw_tba_solve(ts) : es_solve(ts);
    double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    if (r.verdict != want)
      return std::string(what) + ": got " + to_string(r.verdict) + ", want " + to_string(want);
    if (s >= kRunningExampleSecondsMax) return fmt("%s: %.2f s, limit %.0f s", what, s, kRunningExampleSecondsMax);
    return std::string();
  };
  std::string err = run(two, true, Verdict::feasible, "backward solver on 2 cpus");
  if (err.empty()) err = run(two, false, Verdict::feasible, "explicit solver on 2 cpus");
  if (err.empty()) err = run(one, true, Verdict::infeasible, "backward solver on 1 cpu");
  if (err.empty()) err = run(one, false, Verdict::infeasible, "explicit solver on 1 cpu");
  if (!err.empty()) return {false, err};
  return {true, fmt("three-task example feasible on 2 cpus, infeasible on 1, "
                    "both solvers; slowest run %.0f ms",
                    slowest * 1000.0)};
}

Outcome criterion_attractor_trace() {
  // The hand-built 14-node fragment: an initial release leads to a choice
  // node S_1 whose left branch (node 2, then 4) is a trap with every
  // continuation bad, while the right branch (3, then 5) keeps one safe
  // continuation (13) looping back to S_1.
  ExplicitGame g;
  g.owner.assign(14, Owner::tasks);
  for (int id : {1, 4, 5}) g.owner[static_cast<size_t>(id)] = Owner::scheduler;
  g.succ.assign(14, {});
  g.succ[0] = {1};
  g.succ[1] = {2, 3};
  g.succ[2] = {4};
  g.succ[3] = {5};
  g.succ[4] = {6, 7, 8, 9};
  g.succ[5] = {10, 11, 12, 13};
  g.succ[13] = {1};
  g.bad.assign(14, 0);
  for (int id = 6; id <= 12; ++id) g.bad[static_cast<size_t>(id)] = 1;

  AttractorResult res = attractor(g);
  std::set<int> losing;
  for (int id = 0; id < g.size(); ++id)
    if (res.losing[static_cast<size_t>(id)]) losing.insert(id);
  const std::set<int> want = {2, 4, 6, 7, 8, 9, 10, 11, 12};
  if (losing != want) {
    std::string got;
    for (int id : losing) got += fmt("%d ", id);
    return {false, "losing set mismatch, got { " + got + "}"};
  }
  if (res.iterations != 3) return {false, fmt("converged in %d rounds, want 3", res.iterations)};
  const std::vector<std::vector<int>> layers_want = {{6, 7, 8, 9, 10, 11, 12}, {4}, {2}};
  if (res.layers != layers_want) return {false, "layer decomposition mismatch"};
  return {true, "losing set exactly {2,4,6..12}, layers {6..12} < {4} < {2}, 3 rounds"};
}

Outcome criterion_oracle_equivalence(const std::vector<TaskSet>& corpus) {
  if (corpus.empty()) return {false, "instance corpus unavailable"};
  auto t0 = std::chrono::steady_clock::now();
  size_t nodes_checked = 0;
  for (size_t k = 0; k < corpus.size(); ++k) {
    const TaskSet& ts = corpus[k];
    SolveOutcome bw = bw_tba_solve(ts);
    SolveOutcome es = es_solve(ts);
    if (bw.verdict == Verdict::inconclusive || es.verdict == Verdict::inconclusive)
      return {false, fmt("instance %zu: inconclusive verdict", k)};
    if (bw.verdict != es.verdict)
      return {false, fmt("instance %zu: backward says %s, explicit says %s", k,
                         to_string(bw.verdict).c_str(), to_string(es.verdict).c_str())};
    OracleResult oracle = full_space_attractor_oracle(ts);
    Verdict truth =
        oracle.losing_contains(initial_node(ts)) ? Verdict::infeasible : Verdict::feasible;
    if (bw.verdict != truth)
      return {false, fmt("instance %zu: verdict %s contradicts the full-space oracle", k,
                         to_string(bw.verdict).c_str())};
    for (size_t i = 0; i < oracle.nodes.size(); ++i) {
      if (bw.losing.covers(oracle.nodes[i]) != static_cast<bool>(oracle.losing[i]))
        return {false, fmt("instance %zu: closure mismatch at %s", k,
                           render_node(oracle.nodes[i]).c_str())};
    }
    nodes_checked += oracle.nodes.size();
  }
  double s = seconds_since(t0);
  if (s > kOracleSecondsMax)
    return {false, fmt("took %.0f s, budget %.0f s", s, kOracleSecondsMax)};
  return {true, fmt("%d instances, %zu nodes compared pointwise against the "
                    "full-space oracle, solver verdicts agree everywhere, %.0f s",
                    kOracleInstances, nodes_checked, s)};
}

Outcome criterion_frontier_equivalence(const std::vector<TaskSet>& corpus) {
  if (corpus.empty()) return {false, "instance corpus unavailable"};
  for (size_t k = 0; k < corpus.size(); ++k) {
    SolveOutcome with = bw_tba_solve(corpus[k], true);
    SolveOutcome without = bw_tba_solve(corpus[k], false);
    if (with.verdict != without.verdict)
      return {false, fmt("instance %zu: verdicts differ across frontier modes", k)};
    if (!(with.losing == without.losing))
      return {false, fmt("instance %zu: final antichains differ across frontier modes", k)};
  }
  return {true, fmt("identical verdicts and final antichains with and without "
                    "frontier restriction on %d instances",
                    kOracleInstances)};
}

Outcome criterion_bad_construction() {
  for (int k = 0; k < kBadInstances; ++k) {
    SplitRng rng = SplitRng(kMasterSeed).child(1000 + static_cast<uint64_t>(k));
    int n = 1 + k % 3;
    int m = 1 + k % 2;
    int t_max = rng.uniform_int(2, 6);
    double u = n * (0.15 + 0.85 * rng.real01());
    TaskSet ts = generate_instance(n, m, u, 2, t_max, mode_cycle(k / 2), rng);

    std::vector<GameNode> bads;
    for (const GameNode& v : enumerate_space(ts))
      if (is_bad(v, ts)) bads.push_back(v);
    if (!(bad_antichain(ts) == minimize(bads)))
      return {false, fmt("instance %d: direct construction differs from "
                         "minimized enumeration",
                         k)};
  }
  return {true, fmt("direct minimal-miss construction equals the minimized "
                    "enumeration on %d instances",
                    kBadInstances)};
}

Outcome criterion_simulation_conformance() {
  size_t pairs = 0;
  for (int k = 0; k < kSimInstances; ++k) {
    SplitRng rng = SplitRng(kMasterSeed).child(2000 + static_cast<uint64_t>(k));
    int n = 2 + k % 2;
    int m = 1 + (k / 2) % 2;
    int t_max = rng.uniform_int(3, 5);
    double u = n * (0.2 + 0.7 * rng.real01());
    TaskSet ts = generate_instance(n, m, u, 3, t_max, mode_cycle(k), rng);
    std::vector<GameNode> nodes = enumerate_space(ts);

    for (int s = 0; s < kSimPairsPerInstance; ++s) {
      const GameNode& v1 =
          nodes[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(nodes.size()) - 1))];
      // Build a dominated partner: lower rct (same idle pattern), higher
      // nat, clamped into the valid band. Every draw is a legal node.
      GameNode v2 = v1;
      for (int i = 0; i < ts.size(); ++i) {
        const SporadicTask& t = ts.tasks[static_cast<size_t>(i)];
        if (v1.state.rct[static_cast<size_t>(i)] > 0) {
          v2.state.rct[static_cast<size_t>(i)] =
              rng.uniform_int(1, v1.state.rct[static_cast<size_t>(i)]);
          int lo = std::max(v1.state.nat[static_cast<size_t>(i)],
                            t.min_interarrival - t.deadline +
                                v2.state.rct[static_cast<size_t>(i)] - 1);
          v2.state.nat[static_cast<size_t>(i)] = rng.uniform_int(lo, t.min_interarrival);
        } else {
          v2.state.nat[static_cast<size_t>(i)] =
              rng.uniform_int(v1.state.nat[static_cast<size_t>(i)], t.min_interarrival);
        }
      }
      if (!is_valid_state(v2.state, ts) || !dominates(v1, v2))
        return {false, fmt("instance %d: constructed partner is not dominated", k)};
      ++pairs;

      bool v1_bad = is_bad(v1, ts);
      bool v2_bad = is_bad(v2, ts);
      if (v2_bad && !v1_bad)
        return {false, fmt("instance %d: miss below %s does not transfer up", k,
                           render_node(v1).c_str())};
      if (v1_bad) continue; // losing already transferred; move matching waived
      std::vector<GameNode> s1 = successors(v1, ts);
      std::vector<GameNode> s2 = successors(v2, ts);
      if (v1.owner == Owner::scheduler) {
        // Everything the harder node can do, the easier one matches below.
        for (const GameNode& a : s1) {
          bool matched = false;
          for (const GameNode& b : s2) matched = matched || dominates(a, b);
          if (!matched)
            return {false, fmt("instance %d: unmatched successor of %s", k,
                               render_node(v1).c_str())};
        }
      } else {
        // Every release against the easier node is matched above.
        for (const GameNode& b : s2) {
          bool matched = false;
          for (const GameNode& a : s1) matched = matched || dominates(a, b);
          if (!matched)
            return {false, fmt("instance %d: unmatched release below %s", k,
                               render_node(v1).c_str())};
        }
      }
    }
  }
  if (pairs < kSimPairsMin)
    return {false, fmt("only %zu ordered pairs sampled, need %zu", pairs, kSimPairsMin)};
  return {true, fmt("%zu ordered dominance pairs across %d instances satisfy "
                    "the alternating-simulation conditions, zero violations",
                    pairs, kSimInstances)};
}

Outcome criterion_order_laws() {
  size_t axiom_checks = 0, closure_points = 0, pred_points = 0;
  for (int k = 0; k < kLawInstances; ++k) {
    SplitRng rng = SplitRng(kMasterSeed).child(3000 + static_cast<uint64_t>(k));
    int n = 1 + k % 2;
    int m = 1 + (k / 2) % 2;
    int t_max = rng.uniform_int(2, 4);
    double u = n * (0.2 + 0.8 * rng.real01());
    TaskSet ts = generate_instance(n, m, u, 2, t_max, mode_cycle(k / 4), rng);
    if (space_size(ts) > kLawSpaceMax)
      return {false, fmt("instance %d: space %zu exceeds the %zu-node cap", k, space_size(ts),
                         kLawSpaceMax)};
    std::vector<GameNode> nodes = enumerate_space(ts);
    auto pick = [&]() -> const GameNode& {
      return nodes[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(nodes.size()) - 1))];
    };

    for (const GameNode& v : nodes)
      if (!dominates(v, v)) return {false, "reflexivity violated"};
    axiom_checks += nodes.size();
    for (int t = 0; t < kLawTriples; ++t) {
      const GameNode& a = pick();
      const GameNode& b = pick();
      const GameNode& c = pick();
      if (dominates(a, b) && dominates(b, a) && !(a == b))
        return {false, "antisymmetry violated"};
      if (dominates(a, b) && dominates(b, c) && !dominates(a, c))
        return {false, "transitivity violated"};
      ++axiom_checks;
    }

    for (int round = 0; round < kLawSubsets; ++round) {
      std::vector<GameNode> x;
      int len = rng.uniform_int(0, 40);
      for (int j = 0; j < len; ++j) x.push_back(pick());
      Antichain min = minimize(x);
      for (const GameNode& v : nodes) {
        bool brute = false;
        for (const GameNode& e : x) brute = brute || dominates(v, e);
        if (min.covers(v) != brute)
          return {false, fmt("instance %d: minimize changed the upward closure", k)};
        ++closure_points;
      }
    }

    std::vector<GameNode> sched;
    for (const GameNode& v : nodes)
      if (v.owner == Owner::scheduler) sched.push_back(v);
    for (int round = 0; round < kLawTargets; ++round) {
      Antichain target;
      int len = rng.uniform_int(1, 12);
      for (int j = 0; j < len; ++j)
        target.insert_minimal(
            sched[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(sched.size()) - 1))]);
      Antichain preds = pre_exists_sharp(target, ts);
      for (const GameNode& v : nodes) {
        if (v.owner != Owner::tasks) continue;
        bool escape = false;
        for (const Move& r : task_moves(v, ts))
          escape = escape || target.covers({succ_tasks(v.state, r, ts), Owner::scheduler});
        if (preds.covers(v) != escape)
          return {false, fmt("instance %d: predecessor closure mismatch at %s", k,
                             render_node(v).c_str())};
        ++pred_points;
      }
    }
  }
  return {true, fmt("%d instances: %zu order-axiom checks, %zu closure points, "
                    "%zu predecessor points, zero violations",
                    kLawInstances, axiom_checks, closure_points, pred_points)};
}

Outcome criterion_performance_ratio() {
  Campaign camp;
  camp.seed = 8227;
  CampaignGroup g;
  g.count = 50;
  g.n = 3;
  g.m = 2;
  g.u_min = 0.6;
  g.u_max = 1.2;
  g.t_min = 7;
  g.t_max = 9;
  g.mode = DeadlineMode::constrained;
  camp.groups = {g};
  std::vector<ExperimentRecord> rows = run_campaign(camp, {"es", "bw-tba"});
  for (const ExperimentRecord& r : rows)
    if (r.feasible == "inconclusive")
      return {false, "campaign produced an inconclusive row"};
  double med = median_explored_ratio(rows, "es", "bw-tba");
  if (med < kPerfMedianMin)
    return {false, fmt("median explored-node ratio es/bw-tba = %.3f, threshold %.1f", med,
                       kPerfMedianMin)};
  return {true, fmt("median explored-node ratio es/bw-tba = %.3f over %d "
                    "instances (threshold %.1f)",
                    med, g.count, kPerfMedianMin)};
}

Outcome criterion_edf_gap() {
  Campaign camp;
  camp.seed = 9119;
  CampaignGroup g;
  g.count = 100;
  g.n = 4;
  g.m = 2;
  g.u_min = 1.6;
  g.u_max = 2.0;
  g.t_min = 5;
  g.t_max = 7;
  g.mode = DeadlineMode::constrained;
  camp.groups = {g};
  std::vector<ExperimentRecord> rows = run_campaign(camp, {"bw-tba", "edf"});
  int gap = 0;
  for (size_t r = 0; r + 1 < rows.size(); r += 2) {
    const ExperimentRecord& bw = rows[r];     // "bw-tba" sorts before "edf"
    const ExperimentRecord& edf = rows[r + 1];
    if (bw.instance_id != edf.instance_id || bw.algorithm != "bw-tba" ||
        edf.algorithm != "edf")
      return {false, "row pairing broke; campaign rows not in expected order"};
    if (bw.feasible == "inconclusive" || edf.feasible == "inconclusive")
      return {false, bw.instance_id + ": inconclusive verdict"};
    if (edf.feasible == "true" && bw.feasible != "true")
      return {false, bw.instance_id + ": EDF schedulable but solver says infeasible"};
    if (edf.feasible == "false" && bw.feasible == "true") ++gap;
  }
  if (gap < 1) return {false, "no instance separates EDF from feasibility"};
  return {true, fmt("%d/%d instances are EDF-unschedulable yet feasible; every "
                    "EDF-schedulable instance is feasible",
                    gap, g.count)};
}

struct CanonLess {
  bool operator()(const GameNode& a, const GameNode& b) const {
    return canonical_node_less(a, b);
  }
};

// The scheduler-owned nodes the verifier walks: all release branches at
// tasks-owned nodes, the picked move at scheduler-owned ones.
std::vector<GameNode> visited_scheduler_nodes(const Certificate& cert) {
  std::set<GameNode, CanonLess> seen;
  std::vector<GameNode> stack{initial_node(cert.task_set)};
  std::vector<GameNode> sched;
  while (!stack.empty()) {
    GameNode v = stack.back();
    stack.pop_back();
    if (!seen.insert(v).second) continue;
    if (is_bad(v, cert.task_set)) continue;
    if (v.owner == Owner::tasks) {
      for (const Move& r : task_moves(v, cert.task_set))
        stack.push_back({succ_tasks(v.state, r, cert.task_set), Owner::scheduler});
    } else {
      sched.push_back(v);
      Move x = pick_move(v, cert);
      stack.push_back({succ_scheduler(v.state, x, cert.task_set), Owner::tasks});
    }
  }
  return sched;
}

Antichain without_element(const Antichain& a, size_t drop) {
  std::vector<GameNode> els = a.sorted_elements();
  Antichain out;
  for (size_t i = 0; i < els.size(); ++i)
    if (i != drop) out.insert_minimal(els[i]);
  return out;
}

std::string read_file_or_empty(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome criterion_certificate_roundtrip(const std::vector<TaskSet>& corpus) {
  if (corpus.empty()) return {false, "instance corpus unavailable"};
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "schedgame_acceptance";
  fs::create_directories(dir);

  int feasible_count = 0, infeasible_count = 0;
  std::vector<fs::path> certs;
  std::string first_tasks;
  for (size_t k = 0; k < corpus.size(); ++k) {
    fs::path tasks = dir / fmt("inst%03zu.tasks", k);
    std::ofstream(tasks) << serialize_task_set(corpus[k]);
    fs::path cert = dir / fmt("inst%03zu.cert", k);
    std::ostringstream out, err;
    int rc = cmd_analyze(tasks.string(), "bw-tba", cert.string(), {}, out, err);
    if (rc == 1) {
      ++infeasible_count;
      continue;
    }
    if (rc != 0) return {false, fmt("analyze exited %d on instance %zu", rc, k)};
    std::ostringstream vout, verr;
    int vc = cmd_verify(cert.string(), vout, verr);
    if (vc != 0)
      return {false, fmt("verify exited %d on instance %zu: %s", vc, k, vout.str().c_str())};
    ++feasible_count;
    certs.push_back(cert);
    if (first_tasks.empty()) first_tasks = tasks.string();
  }
  if (feasible_count == 0) return {false, "corpus contains no feasible instance"};

  // One round trip through the installed binary, not just the library.
  std::string cli = SCHEDGAME_CLI_PATH;
  fs::path sub_cert = dir / "subprocess.cert";
  std::string cmd = "'" + cli + "' analyze '" + first_tasks + "' --certificate '" +
                    sub_cert.string() + "' >/dev/null 2>&1";
  int st = std::system(cmd.c_str());
  if (!WIFEXITED(st) || WEXITSTATUS(st) != 0)
    return {false, "subprocess analyze did not exit 0"};
  cmd = "'" + cli + "' verify '" + sub_cert.string() + "' >/dev/null 2>&1";
  st = std::system(cmd.c_str());
  if (!WIFEXITED(st) || WEXITSTATUS(st) != 0)
    return {false, "subprocess verify did not exit 0"};

  // Deletion sweep: dropping an element the played strategy consults must
  // flip verification; dropping a redundant one may keep it green.
  size_t required_total = 0, redundant_total = 0;
  int examined = 0;
  for (const fs::path& path : certs) {
    if (examined == kMutationCerts) break;
    Certificate cert = parse_certificate(read_file_or_empty(path));
    std::vector<GameNode> sched = visited_scheduler_nodes(cert);
    std::vector<GameNode> els = cert.losing.sorted_elements();
    for (size_t d = 0; d < els.size(); ++d) {
      Certificate mutated = cert;
      mutated.losing = without_element(cert.losing, d);
      bool required = false;
      for (const GameNode& v : sched) {
        if (!(pick_move(v, mutated) == pick_move(v, cert))) {
          required = true;
          break;
        }
      }
      bool still_ok = verify_certificate(mutated).ok;
      if (required && still_ok)
        return {false, fmt("certificate %d: deleting element %zu changes the "
                           "played move yet verification stayed green",
                           examined, d)};
      if (required) ++required_total;
      else ++redundant_total;
    }
    ++examined;
  }
  if (required_total == 0)
    return {false, "no deletion was required anywhere; the sweep has no teeth"};
  return {true, fmt("%d feasible certificates verify end to end (%d infeasible "
                    "skipped), subprocess round trip ok; %zu required deletions "
                    "all detected, %zu redundant tolerated",
                    feasible_count, infeasible_count, required_total, redundant_total)};
}

} // namespace

int main() {
  std::vector<TaskSet> corpus;
  std::string corpus_error;
  try {
    corpus = oracle_corpus();
  } catch (const std::exception& e) {
    corpus_error = e.what();
  }

  std::vector<std::function<Outcome()>> checks = {
      [] { return criterion_running_example(); },
      [] { return criterion_attractor_trace(); },
      [&] { return criterion_oracle_equivalence(corpus); },
      [&] { return criterion_frontier_equivalence(corpus); },
      [] { return criterion_bad_construction(); },
      [] { return criterion_simulation_conformance(); },
      [] { return criterion_order_laws(); },
      [] { return criterion_performance_ratio(); },
      [] { return criterion_edf_gap(); },
      [&] { return criterion_certificate_roundtrip(corpus); },
  };

  bool all = true;
  for (size_t i = 0; i < checks.size(); ++i) {
    Outcome o;
    try {
      o = checks[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("unhandled exception: ") + e.what()};
    }
    if (!corpus_error.empty() && !o.pass && o.detail == "instance corpus unavailable")
      o.detail += ": " + corpus_error;
    std::printf("criterion %zu: %s - %s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}
