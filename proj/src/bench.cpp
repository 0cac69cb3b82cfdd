#include "schedgame/bench.hpp"

#include "schedgame/strategy.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schedgame {

std::string csv_feasible(Verdict v) {
  switch (v) {
  case Verdict::feasible: return "true";
  case Verdict::infeasible: return "false";
  case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

std::string strip_comment(const std::string& line) {
  std::string out = line;
  if (size_t hash = out.find('#'); hash != std::string::npos) out.erase(hash);
  if (!out.empty() && out.back() == '\r') out.pop_back();
  return out;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  return toks;
}

uint64_t parse_u64(const std::string& text, int line_no, const char* what) {
  try {
    size_t used = 0;
    unsigned long long v = std::stoull(text, &used);
    if (used != text.size() || text[0] == '-') throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + text + "'");
  }
}

int parse_int(const std::string& text, int line_no, const char* what) {
  try {
    size_t used = 0;
    long v = std::stol(text, &used);
    if (used != text.size() || v < -1000000000L || v > 1000000000L)
      throw std::invalid_argument("");
    return static_cast<int>(v);
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + text + "'");
  }
}

double parse_double(const std::string& text, int line_no, const char* what) {
  try {
    size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + text + "'");
  }
}

CampaignGroup parse_group(const std::vector<std::string>& toks, int line_no) {
  CampaignGroup g;
  bool saw_count = false, saw_n = false, saw_m = false, saw_u = false;
  bool saw_tmin = false, saw_tmax = false, saw_mode = false;
  for (size_t k = 1; k < toks.size(); ++k) {
    size_t eq = toks[k].find('=');
    if (eq == std::string::npos)
      throw ParseError(line_no, "expected key=value, got '" + toks[k] + "'");
    std::string key = toks[k].substr(0, eq);
    std::string val = toks[k].substr(eq + 1);
    if (key == "count") {
      g.count = parse_int(val, line_no, "count");
      saw_count = true;
    } else if (key == "n") {
      g.n = parse_int(val, line_no, "n");
      saw_n = true;
    } else if (key == "m") {
      g.m = parse_int(val, line_no, "m");
      saw_m = true;
    } else if (key == "u") {
      if (size_t dots = val.find(".."); dots != std::string::npos) {
        g.u_min = parse_double(val.substr(0, dots), line_no, "u");
        g.u_max = parse_double(val.substr(dots + 2), line_no, "u");
      } else {
        g.u_min = g.u_max = parse_double(val, line_no, "u");
      }
      saw_u = true;
    } else if (key == "tmin") {
      g.t_min = parse_int(val, line_no, "tmin");
      saw_tmin = true;
    } else if (key == "tmax") {
      g.t_max = parse_int(val, line_no, "tmax");
      saw_tmax = true;
    } else if (key == "mode") {
      try {
        g.mode = deadline_mode_from_string(val);
      } catch (const std::invalid_argument&) {
        throw ParseError(line_no, "unknown deadline mode '" + val + "'");
      }
      saw_mode = true;
    } else {
      throw ParseError(line_no, "unknown group key '" + key + "'");
    }
  }
  if (!(saw_count && saw_n && saw_m && saw_u && saw_tmin && saw_tmax && saw_mode))
    throw ParseError(line_no, "group needs count, n, m, u, tmin, tmax, mode");
  if (g.count < 1) throw ParseError(line_no, "count must be >= 1");
  if (g.n < 1) throw ParseError(line_no, "n must be >= 1");
  if (g.m < 1) throw ParseError(line_no, "m must be >= 1");
  if (!(g.u_min > 0.0) || g.u_max < g.u_min)
    throw ParseError(line_no, "u range must satisfy 0 < lo <= hi");
  if (g.u_max > static_cast<double>(g.n))
    throw ParseError(line_no, "u must not exceed n");
  if (g.t_min < 2 || g.t_max < g.t_min)
    throw ParseError(line_no, "period range must satisfy 2 <= tmin <= tmax");
  return g;
}

struct InstanceDef {
  int group = 0;
  int index_in_group = 0;
  int global_index = 0;
  std::string id;
};

std::vector<InstanceDef> flatten(const Campaign& campaign) {
  std::vector<InstanceDef> defs;
  int global = 0;
  for (size_t g = 0; g < campaign.groups.size(); ++g) {
    for (int i = 0; i < campaign.groups[g].count; ++i) {
      char id[32];
      std::snprintf(id, sizeof id, "g%02zu_i%04d", g, i);
      defs.push_back({static_cast<int>(g), i, global, id});
      ++global;
    }
  }
  return defs;
}

TaskSet make_instance(const Campaign& campaign, const CampaignGroup& g, int global_index,
                      double* u_drawn) {
  SplitRng rng = SplitRng(campaign.seed).child(static_cast<uint64_t>(global_index));
  double u = g.u_min + (g.u_max - g.u_min) * rng.real01();
  if (u_drawn) *u_drawn = u;
  return generate_instance(g.n, g.m, u, g.t_min, g.t_max, g.mode, rng);
}

SolveOutcome run_algorithm(const std::string& algorithm, const TaskSet& ts,
                           const SolveBudget& budget) {
  if (algorithm == "bw-tba") return bw_tba_solve(ts, true, budget);
  if (algorithm == "bw-tba-nofrontier") return bw_tba_solve(ts, false, budget);
  if (algorithm == "es") return es_solve(ts, budget);
  if (algorithm == "edf") return edf_schedulable(ts, budget);
  throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
}

} // namespace

Campaign parse_campaign(std::string_view text) {
  Campaign campaign;
  bool saw_seed = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::vector<std::string> toks = split_ws(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "seed") {
      if (saw_seed) throw ParseError(line_no, "duplicate seed line");
      if (toks.size() != 2) throw ParseError(line_no, "expected: seed <value>");
      campaign.seed = parse_u64(toks[1], line_no, "seed");
      saw_seed = true;
    } else if (toks[0] == "group") {
      if (!saw_seed) throw ParseError(line_no, "seed line must come first");
      campaign.groups.push_back(parse_group(toks, line_no));
    } else {
      throw ParseError(line_no, "expected 'seed' or 'group', got '" + toks[0] + "'");
    }
  }
  if (!saw_seed) throw ParseError(line_no, "missing seed line");
  if (campaign.groups.empty()) throw ParseError(line_no, "campaign has no groups");
  return campaign;
}

TaskSet instance_for(const Campaign& campaign, int instance_index, double* u_drawn) {
  std::vector<InstanceDef> defs = flatten(campaign);
  if (instance_index < 0 || instance_index >= static_cast<int>(defs.size()))
    throw std::out_of_range("instance index out of range");
  const InstanceDef& def = defs[static_cast<size_t>(instance_index)];
  return make_instance(campaign, campaign.groups[static_cast<size_t>(def.group)],
                       def.global_index, u_drawn);
}

std::vector<ExperimentRecord> run_campaign(const Campaign& campaign,
                                           const std::vector<std::string>& algorithms,
                                           const SolveBudget& per_instance_budget,
                                           int parallelism) {
  if (algorithms.empty()) throw std::invalid_argument("no algorithms selected");
  for (const std::string& a : algorithms)
    if (a != "bw-tba" && a != "bw-tba-nofrontier" && a != "es" && a != "edf")
      throw std::invalid_argument("unknown algorithm '" + a + "'");
  std::vector<InstanceDef> defs = flatten(campaign);
  std::vector<ExperimentRecord> rows(defs.size() * algorithms.size());

  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= defs.size() || failed.load()) return;
      const InstanceDef& def = defs[k];
      const CampaignGroup& group = campaign.groups[static_cast<size_t>(def.group)];
      try {
        double u = 0.0;
        TaskSet ts = make_instance(campaign, group, def.global_index, &u);
        for (size_t a = 0; a < algorithms.size(); ++a) {
          SolveOutcome outcome = run_algorithm(algorithms[a], ts, per_instance_budget);
          ExperimentRecord& row = rows[k * algorithms.size() + a];
          row.instance_id = def.id;
          row.n = group.n;
          row.m = group.m;
          row.u_target = u;
          row.t_min = group.t_min;
          row.t_max = group.t_max;
          row.deadline_mode = group.mode;
          row.seed = campaign.seed;
          row.algorithm = algorithms[a];
          row.feasible = csv_feasible(outcome.verdict);
          row.explored_nodes = outcome.metrics.explored_nodes;
          row.peak_set_size = outcome.metrics.peak_set_size;
          row.iterations = outcome.iterations;
          row.wall_time_ms = outcome.metrics.wall_time_ms;
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        failure = e.what();
        failed.store(true);
        return;
      }
    }
  };

  size_t want = parallelism > 0 ? static_cast<size_t>(parallelism)
                                : std::max(1u, std::thread::hardware_concurrency());
  want = std::min(want, defs.size());
  if (want <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t t = 0; t < want; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) throw std::runtime_error("campaign failed: " + failure);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     if (a.instance_id != b.instance_id) return a.instance_id < b.instance_id;
                     return a.algorithm < b.algorithm;
                   });
  return rows;
}

static const char* kCsvHeader =
    "instance_id,n,m,u_target,t_min,t_max,deadline_mode,seed,algorithm,feasible,"
    "explored_nodes,peak_set_size,iterations,wall_time_ms";

std::string to_csv(const std::vector<ExperimentRecord>& rows) {
  std::string out = "# schema=1 rng=";
  out += SplitRng::algorithm_name;
  out += '\n';
  out += kCsvHeader;
  out += '\n';
  char buf[128];
  for (const ExperimentRecord& r : rows) {
    out += r.instance_id;
    std::snprintf(buf, sizeof buf, ",%d,%d,", r.n, r.m);
    out += buf;
    std::snprintf(buf, sizeof buf, "%.17g", r.u_target);
    out += buf;
    std::snprintf(buf, sizeof buf, ",%d,%d,", r.t_min, r.t_max);
    out += buf;
    out += to_string(r.deadline_mode);
    std::snprintf(buf, sizeof buf, ",%llu,", static_cast<unsigned long long>(r.seed));
    out += buf;
    out += r.algorithm;
    out += ',';
    out += r.feasible;
    std::snprintf(buf, sizeof buf, ",%zu,%zu,%d,", r.explored_nodes, r.peak_set_size,
                  r.iterations);
    out += buf;
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_time_ms);
    out += buf;
    out += '\n';
  }
  return out;
}

std::vector<ExperimentRecord> parse_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool saw_header = false;
  std::vector<ExperimentRecord> rows;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    if (!saw_header) {
      if (raw != kCsvHeader) throw ParseError(line_no, "unexpected column header");
      saw_header = true;
      continue;
    }
    std::vector<std::string> fields;
    size_t start = 0;
    for (;;) {
      size_t comma = raw.find(',', start);
      fields.push_back(raw.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 14) throw ParseError(line_no, "expected 14 fields");
    ExperimentRecord r;
    r.instance_id = fields[0];
    r.n = parse_int(fields[1], line_no, "n");
    r.m = parse_int(fields[2], line_no, "m");
    r.u_target = parse_double(fields[3], line_no, "u_target");
    r.t_min = parse_int(fields[4], line_no, "t_min");
    r.t_max = parse_int(fields[5], line_no, "t_max");
    try {
      r.deadline_mode = deadline_mode_from_string(fields[6]);
    } catch (const std::invalid_argument&) {
      throw ParseError(line_no, "unknown deadline mode '" + fields[6] + "'");
    }
    r.seed = parse_u64(fields[7], line_no, "seed");
    r.algorithm = fields[8];
    if (fields[9] != "true" && fields[9] != "false" && fields[9] != "inconclusive")
      throw ParseError(line_no, "bad feasible value '" + fields[9] + "'");
    r.feasible = fields[9];
    r.explored_nodes = static_cast<size_t>(parse_u64(fields[10], line_no, "explored_nodes"));
    r.peak_set_size = static_cast<size_t>(parse_u64(fields[11], line_no, "peak_set_size"));
    r.iterations = parse_int(fields[12], line_no, "iterations");
    r.wall_time_ms = parse_double(fields[13], line_no, "wall_time_ms");
    rows.push_back(std::move(r));
  }
  if (!saw_header) throw ParseError(line_no, "missing column header");
  return rows;
}

double median_explored_ratio(const std::vector<ExperimentRecord>& rows,
                             const std::string& numerator_alg,
                             const std::string& denominator_alg) {
  std::map<std::string, std::pair<double, double>> per_instance; // id -> (num, den)
  for (const ExperimentRecord& r : rows) {
    if (r.feasible == "inconclusive") continue;
    if (r.algorithm == numerator_alg)
      per_instance[r.instance_id].first = static_cast<double>(r.explored_nodes);
    else if (r.algorithm == denominator_alg)
      per_instance[r.instance_id].second = static_cast<double>(r.explored_nodes);
  }
  std::vector<double> ratios;
  for (const auto& [id, nd] : per_instance)
    if (nd.first > 0.0 && nd.second > 0.0) ratios.push_back(nd.first / nd.second);
  if (ratios.empty()) return 0.0;
  std::sort(ratios.begin(), ratios.end());
  size_t mid = ratios.size() / 2;
  if (ratios.size() % 2 == 1) return ratios[mid];
  return 0.5 * (ratios[mid - 1] + ratios[mid]);
}

std::string summarize(const std::vector<ExperimentRecord>& rows) {
  struct Agg {
    size_t runs = 0, feasible = 0, infeasible = 0, inconclusive = 0;
    size_t explored = 0, max_explored = 0;
    double wall_ms = 0.0;
  };
  std::map<std::string, Agg> per_alg;
  for (const ExperimentRecord& r : rows) {
    Agg& a = per_alg[r.algorithm];
    ++a.runs;
    if (r.feasible == "true") ++a.feasible;
    else if (r.feasible == "false") ++a.infeasible;
    else ++a.inconclusive;
    a.explored += r.explored_nodes;
    a.max_explored = std::max(a.max_explored, r.explored_nodes);
    a.wall_ms += r.wall_time_ms;
  }
  std::ostringstream out;
  char buf[160];
  out << "rows: " << rows.size() << "\n";
  for (const auto& [alg, a] : per_alg) {
    std::snprintf(buf, sizeof buf,
                  "%-18s runs=%zu feasible=%zu infeasible=%zu inconclusive=%zu "
                  "mean_explored=%.1f max_explored=%zu mean_wall_ms=%.3f",
                  alg.c_str(), a.runs, a.feasible, a.infeasible, a.inconclusive,
                  a.runs ? static_cast<double>(a.explored) / static_cast<double>(a.runs) : 0.0,
                  a.max_explored, a.runs ? a.wall_ms / static_cast<double>(a.runs) : 0.0);
    out << buf << "\n";
  }
  std::vector<std::string> algs;
  for (const auto& [alg, a] : per_alg) algs.push_back(alg);
  for (size_t i = 0; i < algs.size(); ++i) {
    for (size_t j = 0; j < algs.size(); ++j) {
      if (i == j) continue;
      double med = median_explored_ratio(rows, algs[i], algs[j]);
      if (med <= 0.0) continue;
      std::snprintf(buf, sizeof buf, "median explored ratio %s/%s = %.3f", algs[i].c_str(),
                    algs[j].c_str(), med);
      out << buf << "\n";
    }
  }
  return out.str();
}

} // namespace schedgame
