#include "schedgame/solver.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

namespace schedgame {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::feasible: return "feasible";
    case Verdict::infeasible: return "infeasible";
    default: return "inconclusive";
  }
}

Antichain bad_antichain(const TaskSet& ts) {
  const int n = ts.size();
  Antichain out;
  GameNode v;
  v.owner = Owner::tasks;
  v.state.rct.assign(n, 0);
  v.state.nat.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    const auto& t = ts.tasks[i];
    for (int r = 1; r <= t.wcet; ++r) {
      // All idle/active patterns of the other components; each pattern is a
      // distinct idle signature, so none of these collide or compare.
      for (uint64_t mask = 0; mask < (1ULL << (n - 1)); ++mask) {
        int bit = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          bool act = mask & (1ULL << bit);
          v.state.rct[j] = act ? 1 : 0;
          v.state.nat[j] = ts.tasks[j].min_interarrival;
          ++bit;
        }
        v.state.rct[i] = r;
        v.state.nat[i] = t.min_interarrival - t.deadline + r - 1; // laxity -1
        out.insert_minimal(v);
      }
    }
  }
  return out;
}

Antichain pre_exists_sharp(const Antichain& a, const TaskSet& ts) {
  Antichain out;
  for (const auto& v : a.elements()) {
    if (v.owner != Owner::scheduler)
      throw std::invalid_argument("pre_exists_sharp expects scheduler-owned elements");
    for (const auto& p : preds_of_scheduler_node(v, ts)) out.insert_minimal(p);
  }
  return out;
}

namespace {

// Universal-predecessor test: every move from scheduler-owned v lands in
// the upward closure of `losing`. Successors that left the bounded space
// are covered too (they dominate a bad representative), so no special case.
bool all_succs_covered(const GameNode& v, const Antichain& losing, const TaskSet& ts) {
  for (const auto& x : scheduler_moves(v, ts)) {
    GameNode s{succ_scheduler(v.state, x, ts), Owner::tasks};
    if (!losing.covers(s)) return false;
  }
  return true;
}

int hardness(const GameNode& v) {
  int h = 0;
  for (int x : v.state.rct) h += x;
  for (int x : v.state.nat) h -= x;
  return h;
}

bool search_before(const GameNode& a, const GameNode& b) {
  int ha = hardness(a), hb = hardness(b);
  if (ha != hb) return ha > hb;
  return canonical_node_less(a, b);
}

} // namespace

Antichain pre_forall_sharp(const Antichain& losing, const Antichain& frontier,
                           const TaskSet& ts, ForallOpts opts, ExploreTracker* tracker) {
  std::vector<GameNode> seeds;
  for (const auto& v : frontier.elements()) {
    if (v.owner != Owner::tasks) continue;
    if (tracker) tracker->note(v);
    auto ps = preds_of_tasks_node(v, ts);
    seeds.insert(seeds.end(), ps.begin(), ps.end());
  }
  std::sort(seeds.begin(), seeds.end(), canonical_node_less);
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  Antichain found;
  std::vector<GameNode> to_search;
  for (const auto& u : seeds) {
    if (losing.covers(u) || found.covers(u)) continue;
    if (tracker) tracker->note(u);
    if (all_succs_covered(u, losing, ts)) {
      found.insert_minimal(u);
      continue;
    }
    // The wanted nodes above this failing seed are somewhere in its upward
    // closure; enumerate it minus what is already losing.
    for (auto& w : upward_closure_enum(u, ts)) {
      if (w == u || losing.covers(w)) continue;
      to_search.push_back(std::move(w));
    }
    if (tracker) tracker->check_worklist(to_search.size());
  }

  // Hardest-first: the non-qualifying region is downward closed, so a
  // failing candidate rules out everything below it.
  std::sort(to_search.begin(), to_search.end(), search_before);
  to_search.erase(std::unique(to_search.begin(), to_search.end()), to_search.end());
  std::vector<char> dead(to_search.size(), 0);
  for (size_t k = 0; k < to_search.size(); ++k) {
    if (dead[k]) continue;
    const GameNode& v = to_search[k];
    if (found.covers(v)) continue;
    if (tracker) tracker->note(v);
    if (all_succs_covered(v, losing, ts)) {
      found.insert_minimal(v);
    } else if (opts.prune) {
      for (size_t j = k + 1; j < to_search.size(); ++j)
        if (!dead[j] && dominates(v, to_search[j])) dead[j] = true;
    }
  }
  return found;
}

SolveOutcome bw_tba_solve(const TaskSet& ts, bool use_frontier, const SolveBudget& budget,
                          BwTrace* trace, ForallOpts opts) {
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  out.algorithm = use_frontier ? "bw-tba" : "bw-tba-nofrontier";
  ExploreTracker tracker(budget);

  Antichain a = bad_antichain(ts);
  Antichain frontier = a;
  size_t peak = a.size();
  int iterations = 0;
  try {
    while (true) {
      std::vector<GameNode> produced;
      for (const auto& v : frontier.elements()) {
        if (v.owner != Owner::scheduler) continue;
        tracker.note(v);
        auto ps = preds_of_scheduler_node(v, ts);
        produced.insert(produced.end(), ps.begin(), ps.end());
      }
      for (const auto& v : pre_forall_sharp(a, frontier, ts, opts, &tracker).elements())
        produced.push_back(v);
      std::sort(produced.begin(), produced.end(), canonical_node_less);
      produced.erase(std::unique(produced.begin(), produced.end()), produced.end());

      std::vector<GameNode> inserted;
      for (const auto& u : produced)
        if (a.insert_minimal(u).inserted) inserted.push_back(u);
      // A later insert may evict an earlier one; only survivors count as
      // this round's new elements.
      std::vector<GameNode> added;
      for (const auto& u : inserted)
        if (a.contains_element(u)) added.push_back(u);

      ++iterations;
      peak = std::max(peak, a.size());
      if (trace) trace->rounds.push_back({added, a.size()});
      if (added.empty()) break;
      if (use_frontier) {
        Antichain next;
        for (const auto& u : added) next.insert_minimal(u);
        frontier = std::move(next);
      } else {
        frontier = a;
      }
    }
    out.verdict = a.covers(initial_node(ts)) ? Verdict::infeasible : Verdict::feasible;
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::inconclusive;
    out.note = e.what();
  }
  out.losing = std::move(a);
  out.iterations = iterations;
  out.metrics.explored_nodes = tracker.count();
  out.metrics.peak_set_size = peak;
  out.metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

AttractorResult attractor(const ExplicitGame& g) {
  const int n = g.size();
  AttractorResult res;
  res.losing.assign(n, 0);

  std::vector<std::vector<int>> rev(n);
  std::vector<int> pending(n, 0); // scheduler countdown: successors not yet losing
  for (int v = 0; v < n; ++v) {
    if (g.bad[v]) continue; // sink
    for (int w : g.succ[v]) rev[w].push_back(v);
    pending[v] = static_cast<int>(g.succ[v].size());
  }

  std::vector<int> layer0;
  for (int v = 0; v < n; ++v)
    if (g.bad[v]) {
      res.losing[v] = 1;
      layer0.push_back(v);
    }
  res.layers.push_back(layer0);

  std::vector<int> current = layer0;
  for (int round = 1;; ++round) {
    std::vector<int> newly;
    if (round == 1) {
      // No remaining in-space move: whatever the scheduler does, the play
      // has already left the modeled space, which only happens past a miss.
      for (int v = 0; v < n; ++v)
        if (!res.losing[v] && g.owner[v] == Owner::scheduler && pending[v] == 0)
          newly.push_back(v);
      for (int v : newly) res.losing[v] = 1;
    }
    for (int w : current) {
      for (int u : rev[w]) {
        if (res.losing[u]) continue;
        if (g.owner[u] == Owner::tasks) {
          res.losing[u] = 1;
          newly.push_back(u);
        } else if (--pending[u] == 0) {
          res.losing[u] = 1;
          newly.push_back(u);
        }
      }
    }
    res.iterations = round;
    if (newly.empty()) break;
    std::sort(newly.begin(), newly.end());
    res.layers.push_back(newly);
    current = std::move(newly);
  }
  return res;
}

namespace {

struct ReachableGraph {
  std::vector<GameNode> nodes;
  ExplicitGame game;
};

ReachableGraph explore_reachable(const TaskSet& ts, ExploreTracker& tracker) {
  ReachableGraph rg;
  std::unordered_map<GameNode, int, NodeHash> id;
  std::queue<int> work;
  auto intern = [&](const GameNode& v) {
    auto [it, fresh] = id.try_emplace(v, static_cast<int>(rg.nodes.size()));
    if (fresh) {
      rg.nodes.push_back(v);
      rg.game.owner.push_back(v.owner);
      rg.game.succ.emplace_back();
      rg.game.bad.push_back(is_bad(v, ts) ? 1 : 0);
      work.push(it->second);
    }
    return it->second;
  };

  intern(initial_node(ts));
  while (!work.empty()) {
    int vid = work.front();
    work.pop();
    GameNode v = rg.nodes[vid]; // copy: rg.nodes may reallocate below
    tracker.note(v);
    if (rg.game.bad[vid]) continue;
    if (v.owner == Owner::scheduler) {
      for (const auto& x : scheduler_moves(v, ts)) {
        GameNode s{succ_scheduler(v.state, x, ts), Owner::tasks};
        if (!is_valid_state(s.state, ts)) continue; // a miss beyond Bad; not a node
        int sid = intern(s); // intern first: it may reallocate succ
        rg.game.succ[vid].push_back(sid);
      }
    } else {
      for (const auto& r : task_moves(v, ts)) {
        GameNode s{succ_tasks(v.state, r, ts), Owner::scheduler};
        int sid = intern(s);
        rg.game.succ[vid].push_back(sid);
      }
    }
  }
  return rg;
}

} // namespace

SolveOutcome es_solve(const TaskSet& ts, const SolveBudget& budget) {
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  out.algorithm = "es";
  ExploreTracker tracker(budget);
  try {
    ReachableGraph rg = explore_reachable(ts, tracker);
    AttractorResult att = attractor(rg.game);
    for (int v = 0; v < rg.game.size(); ++v)
      if (att.losing[v]) out.losing_nodes.push_back(rg.nodes[v]);
    std::sort(out.losing_nodes.begin(), out.losing_nodes.end(), canonical_node_less);
    for (const auto& v : out.losing_nodes) out.losing.insert_minimal(v);
    out.verdict = att.losing[0] ? Verdict::infeasible : Verdict::feasible;
    out.iterations = att.iterations;
    out.metrics.peak_set_size = out.losing_nodes.size();
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::inconclusive;
    out.note = e.what();
  }
  out.metrics.explored_nodes = tracker.count();
  out.metrics.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

bool OracleResult::losing_contains(const GameNode& v) const {
  for (size_t k = 0; k < nodes.size(); ++k)
    if (losing[k] && nodes[k] == v) return true;
  return false;
}

OracleResult full_space_attractor_oracle(const TaskSet& ts, size_t node_cap) {
  OracleResult res;
  res.nodes = enumerate_space(ts, node_cap);
  std::unordered_map<GameNode, int, NodeHash> id;
  for (size_t k = 0; k < res.nodes.size(); ++k)
    id.emplace(res.nodes[k], static_cast<int>(k));

  ExplicitGame g;
  const int n = static_cast<int>(res.nodes.size());
  g.owner.resize(n);
  g.succ.resize(n);
  g.bad.resize(n);
  for (int vid = 0; vid < n; ++vid) {
    const GameNode& v = res.nodes[vid];
    g.owner[vid] = v.owner;
    g.bad[vid] = is_bad(v, ts) ? 1 : 0;
    if (g.bad[vid]) continue;
    if (v.owner == Owner::scheduler) {
      // Out-of-space successors are misses and drop out; the countdown in
      // the attractor then treats them as already losing.
      for (const auto& x : scheduler_moves(v, ts)) {
        GameNode s{succ_scheduler(v.state, x, ts), Owner::tasks};
        if (!is_valid_state(s.state, ts)) continue;
        g.succ[vid].push_back(id.at(s));
      }
    } else {
      for (const auto& r : task_moves(v, ts)) {
        GameNode s{succ_tasks(v.state, r, ts), Owner::scheduler};
        g.succ[vid].push_back(id.at(s));
      }
    }
  }
  res.att = attractor(g);
  res.losing = res.att.losing;
  for (int vid = 0; vid < n; ++vid)
    if (res.losing[vid]) res.losing_antichain.insert_minimal(res.nodes[vid]);
  return res;
}

} // namespace schedgame
