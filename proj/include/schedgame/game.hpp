#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "schedgame/tasks.hpp"

namespace schedgame {

/// The feasibility question is played on a turn-based game between the
/// scheduler and the task coalition. A system state tracks, per task,
///   rct: remaining computation time of the current job, in [0, C_i]
///   nat: ticks until the next arrival is permitted, at most T_i
///       (may go negative while a job is still running past its period)
/// A task is active when rct > 0 and idle otherwise; idle nat is clamped at 0.
/// The state space is restricted to states where every active task has
/// laxity >= -1; laxity -1 on a tasks-owned node already is a miss.
struct SystemState {
  std::vector<int> rct;
  std::vector<int> nat;

  int size() const { return static_cast<int>(rct.size()); }
  friend bool operator==(const SystemState&, const SystemState&) = default;
};

enum class Owner : uint8_t { scheduler, tasks };

struct GameNode {
  SystemState state;
  Owner owner = Owner::tasks;

  friend bool operator==(const GameNode&, const GameNode&) = default;
};

struct NodeHash {
  size_t operator()(const GameNode& v) const {
    uint64_t h = v.owner == Owner::scheduler ? 0x9E3779B97F4A7C15ULL : 0xC2B2AE3D27D4EB4FULL;
    auto mix = [&h](uint64_t x) {
      h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    };
    for (int x : v.state.rct) mix(static_cast<uint64_t>(static_cast<int64_t>(x)));
    for (int x : v.state.nat) mix(static_cast<uint64_t>(static_cast<int64_t>(x)));
    return static_cast<size_t>(h);
  }
};

/// A move is a set of task indices, kept sorted ascending:
/// for the scheduler the set of tasks granted a processor this tick,
/// for the task coalition the set of eligible tasks that release a job.
struct Move {
  std::vector<int> task_indices;

  friend bool operator==(const Move&, const Move&) = default;
};

std::string render_move(const Move& m); // "{0,2}" or "{}"

/// Slack of task i: ticks its current job can still afford to not run,
/// nat - (T_i - D_i) - rct. Negative means the deadline is already lost.
int laxity(const SystemState& s, int i, const TaskSet& ts);

std::vector<int> active_set(const SystemState& s);
std::vector<int> eligible_set(const SystemState& s); // idle and arrival due

/// Tasks-owned node with some active task of negative laxity.
bool is_bad(const GameNode& v, const TaskSet& ts);

/// Bounds check: rct in [0, C_i]; idle nat in [0, T_i]; active nat <= T_i
/// with laxity >= -1.
bool is_valid_state(const SystemState& s, const TaskSet& ts);

/// All scheduler moves: subsets of the active set of size at most cpus,
/// enumerated by ascending bitmask over the active list.
std::vector<Move> scheduler_moves(const GameNode& v, const TaskSet& ts);

/// All coalition moves: subsets of the eligible set, ascending bitmask order.
std::vector<Move> task_moves(const GameNode& v, const TaskSet& ts);

/// One tick of execution: rct of scheduled tasks drops by 1, every nat drops
/// by 1, idle nat clamped at 0. Pure arithmetic; the result may fall outside
/// the restricted space (an unscheduled task at laxity -1), and callers that
/// care test validity or covering themselves.
SystemState succ_scheduler(const SystemState& s, const Move& x, const TaskSet& ts);

/// Releases: every task in r restarts at (rct, nat) = (C_i, T_i).
SystemState succ_tasks(const SystemState& s, const Move& r, const TaskSet& ts);

/// All-zero state, coalition to move.
GameNode initial_node(const TaskSet& ts);

/// Every valid node of both owners. Throws std::length_error above node_cap.
std::vector<GameNode> enumerate_space(const TaskSet& ts, size_t node_cap = 4u << 20);

/// Number of nodes enumerate_space would produce, without materializing.
/// Saturates at SIZE_MAX on overflow.
size_t space_size(const TaskSet& ts);

/// Minimal representatives of the coalition-owned predecessors of the upward
/// closure of scheduler-owned v: one candidate per subset of the components
/// with rct >= 1 and nat == T_i (those the coalition could just have
/// released), taking (0, 0) on the released components and copying v
/// elsewhere. Pairwise incomparable.
std::vector<GameNode> preds_of_scheduler_node(const GameNode& v, const TaskSet& ts);

/// Minimal representatives of the scheduler-owned predecessors of the upward
/// closure of tasks-owned v: nat is min(nat + 1, T_i) throughout; components
/// at rct == C_i are forced unscheduled; scheduled sets range over subsets of
/// the idle components of v (at most cpus of them), which finish exactly now
/// with rct 1 in the predecessor. Candidates outside the restricted space are
/// dropped; the survivors are pairwise incomparable.
std::vector<GameNode> preds_of_tasks_node(const GameNode& v, const TaskSet& ts);

/// Canonical one-line rendering: "P | rct: 0 1 | nat: 0 2" (P = tasks-owned,
/// S = scheduler-owned).
std::string render_node(const GameNode& v);

/// Inverse of render_node; throws ParseError (line 0) on malformed input or
/// task-count mismatch.
GameNode parse_node(std::string_view text, int expected_n);

} // namespace schedgame
