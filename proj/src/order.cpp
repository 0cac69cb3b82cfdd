#include "schedgame/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace schedgame {

OrderResult compare(const GameNode& a, const GameNode& b) {
  if (a.owner != b.owner || a.state.size() != b.state.size())
    return OrderResult::incomparable;
  bool a_ge = true, b_ge = true;
  for (int i = 0; i < a.state.size(); ++i) {
    int ra = a.state.rct[i], rb = b.state.rct[i];
    int na = a.state.nat[i], nb = b.state.nat[i];
    // a >= b on component i: ra >= rb, rb == 0 implies ra == 0, na <= nb.
    if (!(ra >= rb && (rb != 0 || ra == 0) && na <= nb)) a_ge = false;
    if (!(rb >= ra && (ra != 0 || rb == 0) && nb <= na)) b_ge = false;
    if (!a_ge && !b_ge) return OrderResult::incomparable;
  }
  if (a_ge && b_ge) return OrderResult::equal;
  return a_ge ? OrderResult::above : OrderResult::below;
}

bool dominates(const GameNode& a, const GameNode& b) {
  if (a.owner != b.owner || a.state.size() != b.state.size()) return false;
  for (int i = 0; i < a.state.size(); ++i) {
    int ra = a.state.rct[i], rb = b.state.rct[i];
    if (ra < rb || (rb == 0 && ra != 0) || a.state.nat[i] > b.state.nat[i]) return false;
  }
  return true;
}

uint64_t Antichain::bucket_key(const GameNode& v) {
  // Comparable nodes share owner and idle pattern, so this key is exact:
  // nothing outside the bucket can be related to v.
  uint64_t key = v.owner == Owner::scheduler ? (1ULL << 63) : 0;
  for (int i = 0; i < v.state.size(); ++i)
    if (v.state.rct[i] == 0) key |= 1ULL << i;
  return key;
}

bool Antichain::covers(const GameNode& v) const {
  auto it = buckets_.find(bucket_key(v));
  if (it == buckets_.end()) return false;
  for (const auto& e : it->second)
    if (dominates(v, e)) return true;
  return false;
}

Antichain::InsertOutcome Antichain::insert_minimal(const GameNode& v) {
  InsertOutcome out;
  auto& bucket = buckets_[bucket_key(v)];
  for (const auto& e : bucket)
    if (dominates(v, e)) return out;
  auto evict = std::remove_if(bucket.begin(), bucket.end(),
                              [&](const GameNode& e) { return dominates(e, v); });
  out.removed = static_cast<int>(bucket.end() - evict);
  bucket.erase(evict, bucket.end());
  bucket.push_back(v);
  count_ += 1 - static_cast<size_t>(out.removed);
  out.inserted = true;
  return out;
}

std::vector<GameNode> Antichain::elements() const {
  std::vector<GameNode> out;
  out.reserve(count_);
  for (const auto& [key, bucket] : buckets_)
    out.insert(out.end(), bucket.begin(), bucket.end());
  return out;
}

bool canonical_node_less(const GameNode& a, const GameNode& b) {
  if (a.owner != b.owner) return a.owner == Owner::tasks; // 'P' sorts before 'S'
  if (a.state.rct != b.state.rct) return a.state.rct < b.state.rct;
  return a.state.nat < b.state.nat;
}

std::vector<GameNode> Antichain::sorted_elements() const {
  auto out = elements();
  std::sort(out.begin(), out.end(), canonical_node_less);
  return out;
}

std::vector<GameNode> Antichain::covering_elements(const GameNode& v) const {
  std::vector<GameNode> out;
  auto it = buckets_.find(bucket_key(v));
  if (it == buckets_.end()) return out;
  for (const auto& e : it->second)
    if (dominates(v, e)) out.push_back(e);
  return out;
}

bool Antichain::contains_element(const GameNode& v) const {
  auto it = buckets_.find(bucket_key(v));
  if (it == buckets_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

bool operator==(const Antichain& a, const Antichain& b) {
  if (a.count_ != b.count_) return false;
  return a.sorted_elements() == b.sorted_elements();
}

Antichain minimize(const std::vector<GameNode>& nodes) {
  Antichain out;
  for (const auto& v : nodes) out.insert_minimal(v);
  return out;
}

std::vector<GameNode> upward_closure_enum(const GameNode& v, const TaskSet& ts) {
  // Per component: rct fixed at 0 for idle, else any value in [rct_v, C_i];
  // nat any value in [floor_i, nat_v] where the floor keeps the state valid.
  const int n = ts.size();
  std::vector<std::vector<std::pair<int, int>>> choices(n);
  for (int i = 0; i < n; ++i) {
    const auto& t = ts.tasks[i];
    if (v.state.rct[i] == 0) {
      for (int nat = 0; nat <= v.state.nat[i]; ++nat) choices[i].push_back({0, nat});
    } else {
      for (int r = v.state.rct[i]; r <= t.wcet; ++r) {
        int nat_floor = t.min_interarrival - t.deadline + r - 1; // laxity >= -1
        for (int nat = nat_floor; nat <= v.state.nat[i]; ++nat)
          choices[i].push_back({r, nat});
      }
    }
    if (choices[i].empty()) return {};
  }

  std::vector<GameNode> out;
  GameNode w;
  w.owner = v.owner;
  w.state = v.state;
  std::vector<size_t> idx(n, 0);
  while (true) {
    for (int i = 0; i < n; ++i) {
      w.state.rct[i] = choices[i][idx[i]].first;
      w.state.nat[i] = choices[i][idx[i]].second;
    }
    out.push_back(w);
    int p = n - 1;
    while (p >= 0 && ++idx[p] == choices[p].size()) idx[p--] = 0;
    if (p < 0) break;
  }
  auto hardness = [](const GameNode& u) {
    return std::accumulate(u.state.rct.begin(), u.state.rct.end(), 0) -
           std::accumulate(u.state.nat.begin(), u.state.nat.end(), 0);
  };
  std::stable_sort(out.begin(), out.end(), [&](const GameNode& a, const GameNode& b) {
    int ha = hardness(a), hb = hardness(b);
    if (ha != hb) return ha > hb;
    if (a.state.rct != b.state.rct) return a.state.rct < b.state.rct;
    return a.state.nat < b.state.nat;
  });
  return out;
}

std::string serialize_antichain(const Antichain& a) {
  std::string out = "antichain " + std::to_string(a.size()) + "\n";
  for (const auto& v : a.sorted_elements()) out += render_node(v) + "\n";
  return out;
}

Antichain parse_antichain(std::string_view text, int expected_n, int first_line) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = first_line; // 1-based line of the most recent getline
  auto next_line = [&]() {
    if (!std::getline(in, line)) return false;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing antichain header");
  std::istringstream header(line);
  std::string word;
  long long declared = -1;
  if (!(header >> word >> declared) || word != "antichain" || declared < 0 ||
      (header >> word))
    throw ParseError(line_no, "expected 'antichain <count>'");

  Antichain out;
  for (long long k = 0; k < declared; ++k) {
    if (!next_line())
      throw ParseError(line_no + 1, "expected " + std::to_string(declared) +
                                        " antichain elements, got " + std::to_string(k));
    GameNode v;
    try {
      v = parse_node(line, expected_n);
    } catch (const ParseError& e) {
      throw ParseError(line_no, e.message);
    }
    // Any comparability with what came before would silently change the
    // represented set, so reject it.
    if (out.covers(v) || !out.insert_minimal(v).inserted ||
        out.size() != static_cast<size_t>(k) + 1)
      throw ParseError(line_no, "elements are not pairwise incomparable");
  }
  while (next_line())
    if (line.find_first_not_of(" \t") != std::string::npos)
      throw ParseError(line_no, "trailing content after antichain");
  return out;
}

} // namespace schedgame
