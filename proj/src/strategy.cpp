#include "schedgame/strategy.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace schedgame {

std::string serialize_certificate(const Certificate& cert) {
  std::string out = "certificate v1\n";
  out += std::string("feasible ") + (cert.feasible ? "true" : "false") + "\n";
  out += "cpus " + std::to_string(cert.task_set.cpus) + "\n";
  out += "tasks " + std::to_string(cert.task_set.size()) + "\n";
  for (const auto& t : cert.task_set.tasks)
    out += "task " + std::to_string(t.wcet) + " " + std::to_string(t.deadline) + " " +
           std::to_string(t.min_interarrival) + "\n";
  out += serialize_antichain(cert.losing);
  return out;
}

namespace {

// One header line "key value...": returns the remainder stream positioned
// after the keyword, throwing with the 1-based line number otherwise.
std::istringstream expect_line(std::istream& in, int& line_no, const std::string& keyword) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(line_no + 1, "missing '" + keyword + "' line");
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::istringstream fields(line);
  std::string head;
  if (!(fields >> head) || head != keyword)
    throw ParseError(line_no, "expected '" + keyword + "' line");
  return fields;
}

int expect_int(std::istringstream& fields, int line_no, const char* what) {
  long long v = 0;
  if (!(fields >> v) || v < 0 || v > 1000000000LL)
    throw ParseError(line_no, std::string("bad ") + what);
  return static_cast<int>(v);
}

void expect_end(std::istringstream& fields, int line_no) {
  std::string extra;
  if (fields >> extra) throw ParseError(line_no, "trailing tokens");
}

} // namespace

Certificate parse_certificate(std::string_view text) {
  std::istringstream in{std::string(text)};
  int line_no = 0;

  auto version = expect_line(in, line_no, "certificate");
  std::string ver;
  version >> ver;
  if (ver != "v1") throw ParseError(line_no, "unsupported certificate version '" + ver + "'");
  expect_end(version, line_no);

  Certificate cert;
  auto feas = expect_line(in, line_no, "feasible");
  std::string flag;
  feas >> flag;
  if (flag == "true") cert.feasible = true;
  else if (flag == "false") cert.feasible = false;
  else throw ParseError(line_no, "feasible must be true or false");
  expect_end(feas, line_no);

  auto cpus = expect_line(in, line_no, "cpus");
  cert.task_set.cpus = expect_int(cpus, line_no, "cpu count");
  expect_end(cpus, line_no);

  auto count = expect_line(in, line_no, "tasks");
  int n = expect_int(count, line_no, "task count");
  expect_end(count, line_no);

  for (int i = 0; i < n; ++i) {
    auto task = expect_line(in, line_no, "task");
    SporadicTask t;
    t.wcet = expect_int(task, line_no, "wcet");
    t.deadline = expect_int(task, line_no, "deadline");
    t.min_interarrival = expect_int(task, line_no, "min interarrival");
    expect_end(task, line_no);
    cert.task_set.tasks.push_back(t);
  }
  try {
    validate(cert.task_set);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }

  std::string rest;
  std::getline(in, rest, '\0');
  cert.losing = parse_antichain(rest, n, line_no);
  return cert;
}

std::vector<Move> safe_moves(const GameNode& v, const Certificate& cert) {
  std::vector<Move> out;
  for (auto& x : scheduler_moves(v, cert.task_set)) {
    GameNode s{succ_scheduler(v.state, x, cert.task_set), Owner::tasks};
    // An out-of-space successor has an active laxity below -1, which is_bad
    // catches too, so the two tests below cover misses of every kind.
    if (is_bad(s, cert.task_set)) continue;
    if (cert.losing.covers(s)) continue;
    out.push_back(std::move(x));
  }
  return out;
}

Move pick_move(const GameNode& v, const Certificate& cert) {
  auto moves = safe_moves(v, cert);
  if (moves.empty()) throw NoSafeMove(v);
  return *std::min_element(moves.begin(), moves.end(),
                           [](const Move& a, const Move& b) {
                             return a.task_indices < b.task_indices;
                           });
}

VerificationReport verify_certificate(const Certificate& cert) {
  VerificationReport report;
  const TaskSet& ts = cert.task_set;

  if (!cert.feasible) {
    report.ok = cert.losing.covers(initial_node(ts));
    report.reason = report.ok ? "antichain covers the initial node"
                              : "infeasible certificate does not cover the initial node";
    return report;
  }

  struct Visit {
    int parent = -1;
    Move move_from_parent;
  };
  std::vector<GameNode> nodes;
  std::vector<Visit> visits;
  std::unordered_map<GameNode, int, NodeHash> id;
  std::queue<int> work;
  auto intern = [&](const GameNode& v, int parent, const Move& via) {
    auto [it, fresh] = id.try_emplace(v, static_cast<int>(nodes.size()));
    if (fresh) {
      nodes.push_back(v);
      visits.push_back({parent, via});
      work.push(it->second);
    }
    return it->second;
  };
  auto play_to = [&](int vid) {
    std::vector<int> chain;
    for (int cur = vid; cur != -1; cur = visits[cur].parent) chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    std::vector<PlayStep> steps;
    for (size_t k = 0; k < chain.size(); ++k) {
      // Each visit stores the move that led to it, so step k takes the move
      // recorded on step k + 1.
      Move via = k + 1 < chain.size() ? visits[chain[k + 1]].move_from_parent : Move{};
      steps.push_back({nodes[chain[k]], std::move(via)});
    }
    return steps;
  };

  intern(initial_node(ts), -1, {});
  while (!work.empty()) {
    int vid = work.front();
    work.pop();
    GameNode v = nodes[vid];
    if (v.owner == Owner::tasks) {
      if (is_bad(v, ts)) {
        report.ok = false;
        report.visited = nodes.size();
        report.counterexample = play_to(vid);
        report.reason = "reachable deadline miss at " + render_node(v);
        return report;
      }
      for (const auto& r : task_moves(v, ts))
        intern({succ_tasks(v.state, r, ts), Owner::scheduler}, vid, r);
    } else {
      Move x;
      try {
        x = pick_move(v, cert);
      } catch (const NoSafeMove&) {
        report.ok = false;
        report.visited = nodes.size();
        report.counterexample = play_to(vid);
        report.reason = "no safe move at " + render_node(v);
        return report;
      }
      intern({succ_scheduler(v.state, x, ts), Owner::tasks}, vid, x);
    }
  }
  report.ok = true;
  report.visited = nodes.size();
  report.reason = "all plays stay miss-free";
  return report;
}

std::string render_play(const std::vector<PlayStep>& steps) {
  std::string out;
  for (size_t k = 0; k < steps.size(); ++k) {
    out += render_node(steps[k].node) + "\n";
    if (k + 1 < steps.size()) out += "  --" + render_move(steps[k].move) + "-->\n";
  }
  return out;
}

Move edf_move(const GameNode& v, const TaskSet& ts) {
  std::vector<std::pair<int, int>> keyed; // (deadline distance, index)
  for (int i : active_set(v.state))
    keyed.push_back({v.state.nat[i] - (ts.tasks[i].min_interarrival - ts.tasks[i].deadline), i});
  std::sort(keyed.begin(), keyed.end());
  Move out;
  for (size_t k = 0; k < keyed.size() && k < static_cast<size_t>(ts.cpus); ++k)
    out.task_indices.push_back(keyed[k].second);
  std::sort(out.task_indices.begin(), out.task_indices.end());
  return out;
}

SolveOutcome edf_schedulable(const TaskSet& ts, const SolveBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  out.algorithm = "edf";
  ExploreTracker tracker(budget);

  std::unordered_map<GameNode, char, NodeHash> seen;
  std::queue<GameNode> work;
  auto push = [&](const GameNode& v) {
    if (seen.emplace(v, 1).second) work.push(v);
  };
  try {
    push(initial_node(ts));
    out.verdict = Verdict::feasible;
    while (!work.empty()) {
      GameNode v = work.front();
      work.pop();
      tracker.note(v);
      if (v.owner == Owner::tasks) {
        if (is_bad(v, ts)) {
          out.verdict = Verdict::infeasible;
          out.note = "release pattern drives the earliest-deadline rule into " + render_node(v);
          break;
        }
        for (const auto& r : task_moves(v, ts)) push({succ_tasks(v.state, r, ts), Owner::scheduler});
      } else {
        push({succ_scheduler(v.state, edf_move(v, ts), ts), Owner::tasks});
      }
    }
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::inconclusive;
    out.note = e.what();
  }
  out.metrics.explored_nodes = tracker.count();
  out.metrics.peak_set_size = seen.size();
  out.metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

} // namespace schedgame
