#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

namespace schedgame {

/// One sporadic task. A job of up to `wcet` ticks of work may arrive at most
/// every `min_interarrival` ticks and must complete within `deadline` ticks of
/// its arrival. All three are positive; wcet <= deadline (a task that cannot
/// meet its own deadline in isolation is rejected at parse time). deadline may
/// exceed min_interarrival (arbitrary-deadline systems).
struct SporadicTask {
  int wcet = 1;             // C
  int deadline = 1;         // D, relative to arrival
  int min_interarrival = 1; // T
};

/// A task system plus the number of identical processors it runs on.
/// The position of a task in `tasks` is its identity everywhere (moves,
/// state vectors, rendered output).
struct TaskSet {
  std::vector<SporadicTask> tasks;
  int cpus = 1;

  int size() const { return static_cast<int>(tasks.size()); }
};

using Rational = boost::rational<long long>;

/// Parse failure; `line` is 1-based and also baked into what().
class ParseError : public std::runtime_error {
public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line(line), message(message) {}
  int line;
  std::string message;
};

/// Text format, one directive per line, '#' starts a comment:
///
///   cpus <m>
///   task <C> <D> <T>
///   task <C> <D> <T>
///
/// The cpus line must come first; at least one task is required.
TaskSet parse_task_set(std::string_view text);

/// parse_task_set on a file's contents. File-system failures are reported as
/// ParseError on line 0.
TaskSet load_task_set(const std::string& path);

/// Inverse of parse_task_set, byte-stable: "cpus <m>\n" then one
/// "task <C> <D> <T>\n" per task, single spaces, no comments.
std::string serialize_task_set(const TaskSet& ts);

/// Throws std::invalid_argument if the structural invariants do not hold
/// (positive fields, wcet <= deadline, cpus >= 1, at least one task).
void validate(const TaskSet& ts);

/// Exact total utilization, sum of C_i / T_i.
Rational utilization(const TaskSet& ts);

} // namespace schedgame
