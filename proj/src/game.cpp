#include "schedgame/game.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace schedgame {

std::string render_move(const Move& m) {
  std::string out = "{";
  for (size_t k = 0; k < m.task_indices.size(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(m.task_indices[k]);
  }
  out += '}';
  return out;
}

int laxity(const SystemState& s, int i, const TaskSet& ts) {
  return s.nat[i] - (ts.tasks[i].min_interarrival - ts.tasks[i].deadline) - s.rct[i];
}

std::vector<int> active_set(const SystemState& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (s.rct[i] > 0) out.push_back(i);
  return out;
}

std::vector<int> eligible_set(const SystemState& s) {
  std::vector<int> out;
  for (int i = 0; i < s.size(); ++i)
    if (s.rct[i] == 0 && s.nat[i] == 0) out.push_back(i);
  return out;
}

bool is_bad(const GameNode& v, const TaskSet& ts) {
  if (v.owner != Owner::tasks) return false;
  for (int i = 0; i < v.state.size(); ++i)
    if (v.state.rct[i] > 0 && laxity(v.state, i, ts) < 0) return true;
  return false;
}

bool is_valid_state(const SystemState& s, const TaskSet& ts) {
  if (s.size() != ts.size() || static_cast<int>(s.nat.size()) != ts.size()) return false;
  for (int i = 0; i < ts.size(); ++i) {
    const auto& t = ts.tasks[i];
    if (s.rct[i] < 0 || s.rct[i] > t.wcet) return false;
    if (s.nat[i] > t.min_interarrival) return false;
    if (s.rct[i] == 0) {
      if (s.nat[i] < 0) return false;
    } else {
      if (laxity(s, i, ts) < -1) return false;
    }
  }
  return true;
}

namespace {

// Subsets of `pool` listed by ascending bitmask, optionally capped in size.
std::vector<Move> subsets_of(const std::vector<int>& pool, int max_size) {
  const int k = static_cast<int>(pool.size());
  std::vector<Move> out;
  for (uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    if (max_size >= 0 && std::popcount(mask) > max_size) continue;
    Move m;
    for (int b = 0; b < k; ++b)
      if (mask & (1ULL << b)) m.task_indices.push_back(pool[b]);
    out.push_back(std::move(m));
  }
  return out;
}

} // namespace

std::vector<Move> scheduler_moves(const GameNode& v, const TaskSet& ts) {
  return subsets_of(active_set(v.state), ts.cpus);
}

std::vector<Move> task_moves(const GameNode& v, const TaskSet&) {
  return subsets_of(eligible_set(v.state), -1);
}

SystemState succ_scheduler(const SystemState& s, const Move& x, const TaskSet&) {
  SystemState out = s;
  for (int i : x.task_indices) out.rct[i] -= 1;
  for (int i = 0; i < out.size(); ++i) {
    out.nat[i] -= 1;
    if (out.rct[i] == 0 && out.nat[i] < 0) out.nat[i] = 0;
  }
  return out;
}

SystemState succ_tasks(const SystemState& s, const Move& r, const TaskSet& ts) {
  SystemState out = s;
  for (int i : r.task_indices) {
    out.rct[i] = ts.tasks[i].wcet;
    out.nat[i] = ts.tasks[i].min_interarrival;
  }
  return out;
}

GameNode initial_node(const TaskSet& ts) {
  GameNode v;
  v.owner = Owner::tasks;
  v.state.rct.assign(ts.size(), 0);
  v.state.nat.assign(ts.size(), 0);
  return v;
}

size_t space_size(const TaskSet& ts) {
  // Per task: idle states (0, nat) with nat in [0, T], plus active states
  // (r, nat) with r in [1, C] and laxity >= -1, i.e. nat in [T-D+r-1, T].
  size_t per_owner = 1;
  for (const auto& t : ts.tasks) {
    size_t states = static_cast<size_t>(t.min_interarrival) + 1;
    for (int r = 1; r <= t.wcet; ++r)
      states += static_cast<size_t>(t.deadline - r + 2);
    if (states != 0 && per_owner > std::numeric_limits<size_t>::max() / states)
      return std::numeric_limits<size_t>::max();
    per_owner *= states;
  }
  if (per_owner > std::numeric_limits<size_t>::max() / 2)
    return std::numeric_limits<size_t>::max();
  return 2 * per_owner;
}

std::vector<GameNode> enumerate_space(const TaskSet& ts, size_t node_cap) {
  size_t total = space_size(ts);
  if (total > node_cap)
    throw std::length_error("state space of " + std::to_string(total) +
                            " nodes exceeds cap of " + std::to_string(node_cap));

  // Per-task list of admissible (rct, nat) pairs, then the cartesian product.
  std::vector<std::vector<std::pair<int, int>>> choices(ts.size());
  for (int i = 0; i < ts.size(); ++i) {
    const auto& t = ts.tasks[i];
    for (int nat = 0; nat <= t.min_interarrival; ++nat) choices[i].push_back({0, nat});
    for (int r = 1; r <= t.wcet; ++r)
      for (int nat = t.min_interarrival - t.deadline + r - 1; nat <= t.min_interarrival; ++nat)
        choices[i].push_back({r, nat});
  }

  std::vector<GameNode> out;
  out.reserve(total);
  SystemState s;
  s.rct.assign(ts.size(), 0);
  s.nat.assign(ts.size(), 0);
  std::vector<size_t> idx(ts.size(), 0);
  while (true) {
    for (int i = 0; i < ts.size(); ++i) {
      s.rct[i] = choices[i][idx[i]].first;
      s.nat[i] = choices[i][idx[i]].second;
    }
    out.push_back({s, Owner::scheduler});
    out.push_back({s, Owner::tasks});
    int p = ts.size() - 1;
    while (p >= 0 && ++idx[p] == choices[p].size()) idx[p--] = 0;
    if (p < 0) break;
  }
  return out;
}

std::vector<GameNode> preds_of_scheduler_node(const GameNode& v, const TaskSet& ts) {
  // Coalition components that could have just released: a release lands at
  // (C_i, T_i) and the upward closure of v admits any rct >= rct_v (nonzero),
  // so rct_v >= 1 and nat_v == T_i exactly.
  std::vector<int> releasable;
  for (int i = 0; i < v.state.size(); ++i)
    if (v.state.rct[i] >= 1 && v.state.nat[i] == ts.tasks[i].min_interarrival)
      releasable.push_back(i);

  std::vector<GameNode> out;
  const int k = static_cast<int>(releasable.size());
  for (uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    GameNode p;
    p.owner = Owner::tasks;
    p.state = v.state;
    for (int b = 0; b < k; ++b) {
      if (mask & (1ULL << b)) {
        p.state.rct[releasable[b]] = 0;
        p.state.nat[releasable[b]] = 0;
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<GameNode> preds_of_tasks_node(const GameNode& v, const TaskSet& ts) {
  // The clock ticked on the way here: every nat was one higher before the
  // move, capped at T_i so candidates stay in range (nat_v == 0 may also be
  // the idle clamp, and a clamped component is covered by the nat + 1 one).
  std::vector<int> idle_in_target;
  for (int i = 0; i < v.state.size(); ++i)
    if (v.state.rct[i] == 0) idle_in_target.push_back(i);

  std::vector<GameNode> out;
  const int k = static_cast<int>(idle_in_target.size());
  for (uint64_t mask = 0; mask < (1ULL << k); ++mask) {
    if (std::popcount(mask) > ts.cpus) continue;
    GameNode p;
    p.owner = Owner::scheduler;
    p.state = v.state;
    for (int i = 0; i < p.state.size(); ++i)
      p.state.nat[i] = std::min(p.state.nat[i] + 1, ts.tasks[i].min_interarrival);
    for (int b = 0; b < k; ++b)
      if (mask & (1ULL << b)) p.state.rct[idle_in_target[b]] = 1;
    if (is_valid_state(p.state, ts)) out.push_back(std::move(p));
  }
  return out;
}

std::string render_node(const GameNode& v) {
  std::string out(1, v.owner == Owner::scheduler ? 'S' : 'P');
  out += " | rct:";
  for (int x : v.state.rct) out += ' ' + std::to_string(x);
  out += " | nat:";
  for (int x : v.state.nat) out += ' ' + std::to_string(x);
  return out;
}

GameNode parse_node(std::string_view text, int expected_n) {
  auto fail = [](const std::string& msg) -> GameNode { throw ParseError(0, msg); };
  std::string line(text);
  std::istringstream in(line);
  std::string owner_tok, bar1, rct_tok;
  if (!(in >> owner_tok >> bar1 >> rct_tok)) return fail("truncated node line");
  if (owner_tok != "P" && owner_tok != "S") return fail("owner must be P or S");
  if (bar1 != "|" || rct_tok != "rct:") return fail("expected '| rct:'");

  GameNode v;
  v.owner = owner_tok == "S" ? Owner::scheduler : Owner::tasks;
  std::string tok;
  bool in_nat = false;
  while (in >> tok) {
    if (tok == "|") {
      if (in_nat) return fail("unexpected '|'");
      if (!(in >> tok) || tok != "nat:") return fail("expected 'nat:'");
      in_nat = true;
      continue;
    }
    int value = 0;
    size_t used = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      return fail("bad integer '" + tok + "'");
    }
    if (used != tok.size()) return fail("bad integer '" + tok + "'");
    (in_nat ? v.state.nat : v.state.rct).push_back(value);
  }
  if (!in_nat) return fail("missing nat section");
  if (static_cast<int>(v.state.rct.size()) != expected_n ||
      static_cast<int>(v.state.nat.size()) != expected_n)
    return fail("expected " + std::to_string(expected_n) + " components");
  return v;
}

} // namespace schedgame
