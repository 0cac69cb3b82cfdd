#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "schedgame/order.hpp"
#include "schedgame/solver.hpp"
#include "schedgame/tasks.hpp"

namespace schedgame {

/// A feasibility verdict plus the evidence to act on it: the minimal losing
/// nodes. A feasible certificate doubles as an online scheduler: at any
/// scheduler node, play a move whose successor the antichain does not cover
/// and that is not an immediate miss.
struct Certificate {
  TaskSet task_set;
  bool feasible = false;
  Antichain losing;
};

/// "certificate v1" header, feasible flag, platform and task lines, then
/// the antichain serialization. Byte-stable for a fixed certificate.
std::string serialize_certificate(const Certificate& cert);

/// Inverse of serialize_certificate; throws ParseError with 1-based line
/// numbers.
Certificate parse_certificate(std::string_view text);

/// Scheduler moves from v whose successor neither misses a deadline on the
/// spot nor is covered by the certificate's losing antichain. Enumeration
/// order follows scheduler_moves.
std::vector<Move> safe_moves(const GameNode& v, const Certificate& cert);

class NoSafeMove : public std::runtime_error {
public:
  explicit NoSafeMove(GameNode at)
      : std::runtime_error("no safe move at " + render_node(at)), node(std::move(at)) {}
  GameNode node;
};

/// The lexicographically smallest safe move (by sorted index sequence, so
/// {0,1} precedes {1}). Throws NoSafeMove when none exists, which falsifies
/// a feasible certificate at v.
Move pick_move(const GameNode& v, const Certificate& cert);

/// One position of a play and the move taken from it; the final position
/// of a play carries an empty move.
struct PlayStep {
  GameNode node;
  Move move;
};

struct VerificationReport {
  bool ok = false;
  size_t visited = 0; // distinct nodes reached
  std::vector<PlayStep> counterexample;
  std::string reason;
};

/// Exhaustive adversarial check of a feasible certificate: from the initial
/// node, branch over every release choice at tasks-owned nodes and follow
/// pick_move at scheduler-owned ones. ok iff no reachable miss and no
/// stuck scheduler node. For an infeasible certificate this degenerates to
/// checking that the antichain covers the initial node.
VerificationReport verify_certificate(const Certificate& cert);

/// Counterexample rendering: one canonical node line per position, with
/// "  --{i,j}-->" between consecutive positions.
std::string render_play(const std::vector<PlayStep>& steps);

/// Earliest-deadline-first baseline: the min(cpus, active) active tasks
/// whose current job deadline is nearest (key nat[i] - (T_i - D_i)), ties
/// to the smaller index. Work-conserving; ignores any certificate.
Move edf_move(const GameNode& v, const TaskSet& ts);

/// Adversarial traversal with the scheduler pinned to edf_move: feasible
/// iff no release pattern drives EDF into a miss. A positive answer
/// witnesses feasibility; a negative one only bounds EDF.
SolveOutcome edf_schedulable(const TaskSet& ts, const SolveBudget& budget = {});

} // namespace schedgame
