#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schedgame/game.hpp"

namespace schedgame {

/// Partial order on nodes of equal owner: v dominates w when v is at least
/// as hard for the scheduler, component-wise
///   rct_v[i] >= rct_w[i],  rct_w[i] == 0 implies rct_v[i] == 0,
///   nat_v[i] <= nat_w[i].
/// Comparable nodes therefore agree on which tasks are idle, which is what
/// makes exact bucketing by idle pattern possible below. Losing sets are
/// upward closed in this order, so they are stored by minimal elements.
enum class OrderResult { equal, above, below, incomparable };

OrderResult compare(const GameNode& a, const GameNode& b);

/// True when a dominates b (equal counts).
bool dominates(const GameNode& a, const GameNode& b);

/// Total order for canonical listings: owner (tasks first), then rct, then
/// nat, both lexicographic. Unrelated to the domination order.
bool canonical_node_less(const GameNode& a, const GameNode& b);

/// Set of pairwise incomparable nodes representing its upward closure.
/// Buckets by (owner, idle pattern): only the bucket with the exact same
/// pattern can contain comparable nodes, so covering queries probe one
/// bucket.
class Antichain {
public:
  /// True when v lies in the represented upward closure, i.e. v dominates
  /// some element.
  bool covers(const GameNode& v) const;

  struct InsertOutcome {
    bool inserted = false; // false when v was already covered
    int removed = 0;       // elements strictly dominated by v that v evicted
  };

  /// Insert v unless covered; evicts elements that v now covers.
  InsertOutcome insert_minimal(const GameNode& v);

  size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  /// All elements in unspecified order.
  std::vector<GameNode> elements() const;

  /// Elements sorted by (owner, rct lexicographic, nat lexicographic),
  /// tasks-owned first. Canonical order for serialization and comparison.
  std::vector<GameNode> sorted_elements() const;

  /// Elements e with v >= e; empty when v is not covered.
  std::vector<GameNode> covering_elements(const GameNode& v) const;

  bool contains_element(const GameNode& v) const;

  /// Equality as antichains (same element sets).
  friend bool operator==(const Antichain& a, const Antichain& b);

private:
  static uint64_t bucket_key(const GameNode& v);
  std::unordered_map<uint64_t, std::vector<GameNode>> buckets_;
  size_t count_ = 0;
};

/// Minimal elements of an arbitrary node set, as an Antichain.
Antichain minimize(const std::vector<GameNode>& nodes);

/// Every valid node dominating v: the upward closure of {v} within the valid
/// space, sorted by descending (sum rct - sum nat) so harder nodes come
/// first. Used by the solver to search newly-lost regions.
std::vector<GameNode> upward_closure_enum(const GameNode& v, const TaskSet& ts);

/// "antichain <count>" then one render_node line per element, canonical
/// order.
std::string serialize_antichain(const Antichain& a);

/// Inverse of serialize_antichain; text is consumed line by line starting at
/// first_line (0-based) for error reporting. Throws ParseError.
Antichain parse_antichain(std::string_view text, int expected_n, int first_line = 0);

} // namespace schedgame
