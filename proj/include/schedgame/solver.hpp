#pragma once

#include <chrono>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "schedgame/order.hpp"
#include "schedgame/tasks.hpp"

namespace schedgame {

/// Resource limits for a solve call. Exceeding one aborts with
/// BudgetExceeded, which solvers surface as an inconclusive verdict: a
/// budgeted run never reports a wrong answer.
struct SolveBudget {
  size_t max_explored = 50'000'000; // distinct nodes expanded
  double max_seconds = 0.0;         // wall clock; 0 disables
  size_t max_worklist = 8'000'000;  // candidate-queue guard
};

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Counts distinct nodes whose successor or predecessor set gets computed.
/// Membership probes against antichains do not count. The same node is
/// counted once even when revisited.
class ExploreTracker {
public:
  explicit ExploreTracker(SolveBudget budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  void note(const GameNode& v) {
    seen_.insert(v);
    if (seen_.size() > budget_.max_explored)
      throw BudgetExceeded("explored-node budget exceeded");
    if (budget_.max_seconds > 0 && (seen_.size() & 1023) == 0 && elapsed_seconds() > budget_.max_seconds)
      throw BudgetExceeded("time budget exceeded");
  }

  void check_worklist(size_t size) const {
    if (size > budget_.max_worklist) throw BudgetExceeded("candidate worklist budget exceeded");
  }

  size_t count() const { return seen_.size(); }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

private:
  SolveBudget budget_;
  std::unordered_set<GameNode, NodeHash> seen_;
  std::chrono::steady_clock::time_point start_;
};

struct ExplorationMetrics {
  size_t explored_nodes = 0;
  size_t peak_set_size = 0; // max antichain size (backward) or losing-set size
  double wall_time_ms = 0.0;
};

enum class Verdict { feasible, infeasible, inconclusive };
std::string to_string(Verdict v);

struct SolveOutcome {
  Verdict verdict = Verdict::inconclusive;
  Antichain losing;                   // minimal losing nodes (backward solver)
  std::vector<GameNode> losing_nodes; // explicit losing nodes (explicit solver)
  ExplorationMetrics metrics;
  std::string algorithm;
  int iterations = 0; // fixpoint rounds, counting the final unchanged one
  std::string note;   // diagnostic, e.g. which budget was exhausted
};

/// Minimal elements of the set of immediately-miss nodes: per task i and
/// each r in [1, C_i], the i component sits at (r, T_i - D_i + r - 1),
/// laxity exactly -1; every other component is (0, T_j) or (1, T_j) in all
/// combinations. Tasks-owned. The result is already an antichain and its
/// upward closure is exactly the bad nodes of the bounded space.
Antichain bad_antichain(const TaskSet& ts);

/// Minimal predecessors of an upward-closed set of scheduler-owned nodes:
/// minimize of preds_of_scheduler_node over the elements. Throws
/// std::invalid_argument on a tasks-owned element.
Antichain pre_exists_sharp(const Antichain& a, const TaskSet& ts);

struct ForallOpts {
  bool prune = true; // drop candidates dominated by a failed one
};

/// Scheduler-owned nodes outside ↑losing whose every successor is covered
/// by `losing`, as a minimal antichain: the new nodes the scheduler cannot
/// escape from. Seeds the candidate search from the predecessors of the
/// tasks-owned elements of `frontier` (pass frontier = losing for the
/// unoptimized variant), then walks candidate upward closures hardest-first
/// so one failing candidate discards every candidate below it.
Antichain pre_forall_sharp(const Antichain& losing, const Antichain& frontier,
                           const TaskSet& ts, ForallOpts opts = {},
                           ExploreTracker* tracker = nullptr);

/// Per-round record of the backward solver, for inspection in tests.
struct BwTrace {
  struct Round {
    std::vector<GameNode> added; // new antichain elements, canonical order
    size_t antichain_size = 0;   // after the round
  };
  std::vector<Round> rounds;
};

/// Backward fixpoint over antichains: start from bad_antichain, repeatedly
/// add minimal predecessors (existential for tasks-owned targets, universal
/// for scheduler-owned) until nothing changes. With use_frontier, each
/// round only seeds from the previous round's new elements; otherwise from
/// the full antichain. Feasible iff the final antichain does not cover the
/// initial node.
SolveOutcome bw_tba_solve(const TaskSet& ts, bool use_frontier = true,
                          const SolveBudget& budget = {}, BwTrace* trace = nullptr,
                          ForallOpts opts = {});

/// A finite game graph in explicit form. succ[v] lists successor ids (one
/// entry per edge; duplicates allowed and handled); bad nodes are treated
/// as sinks regardless of listed successors.
struct ExplicitGame {
  std::vector<Owner> owner;
  std::vector<std::vector<int>> succ;
  std::vector<char> bad;

  int size() const { return static_cast<int>(owner.size()); }
};

struct AttractorResult {
  std::vector<char> losing;
  /// layers[0] = bad nodes; layers[k] = nodes first lost in round k.
  std::vector<std::vector<int>> layers;
  /// Index of the first round that added nothing; equals layers.size().
  int iterations = 0;
};

/// Layered backward induction: tasks-owned nodes lose once one successor
/// loses, scheduler-owned ones once all do (tracked by a countdown per
/// node). A scheduler node with no successors loses in round 1: its moves
/// all left the modeled space, which only happens past a miss.
AttractorResult attractor(const ExplicitGame& g);

/// Forward-explore the reachable graph from the initial node (bad nodes are
/// sinks), then run the attractor on it. losing_nodes lists the reachable
/// losing nodes; explored counts every reachable node.
SolveOutcome es_solve(const TaskSet& ts, const SolveBudget& budget = {});

struct OracleResult {
  std::vector<GameNode> nodes; // enumerate_space order; ids index into it
  std::vector<char> losing;
  Antichain losing_antichain; // minimize of the losing nodes
  AttractorResult att;
  bool losing_contains(const GameNode& v) const;
};

/// Ground truth by brute force: the attractor over the ENTIRE bounded
/// space, not just the reachable part. Throws std::length_error above
/// node_cap.
OracleResult full_space_attractor_oracle(const TaskSet& ts, size_t node_cap = 4u << 20);

} // namespace schedgame
