#include "doctest.h"

#include <algorithm>

#include "schedgame/bench.hpp"
#include "schedgame/strategy.hpp"

using namespace schedgame;

namespace {

const char* kCampaign =
    "# two tiny groups\n"
    "seed 99\n"
    "group count=2 n=2 m=1 u=0.9 tmin=2 tmax=4 mode=constrained\n"
    "group count=3 n=3 m=2 u=0.8..1.6 tmin=2 tmax=5 mode=implicit\n";

} // namespace

TEST_CASE("campaign files parse into seed and groups") {
  Campaign c = parse_campaign(kCampaign);
  CHECK(c.seed == 99);
  REQUIRE(c.groups.size() == 2);
  CHECK(c.groups[0].count == 2);
  CHECK(c.groups[0].u_min == c.groups[0].u_max);
  CHECK(c.groups[0].u_min == doctest::Approx(0.9));
  CHECK(c.groups[1].u_min == doctest::Approx(0.8));
  CHECK(c.groups[1].u_max == doctest::Approx(1.6));
  CHECK(c.groups[1].mode == DeadlineMode::implicit);
}

TEST_CASE("campaign parsing rejects structural mistakes") {
  auto line_of = [](const char* text) {
    try {
      parse_campaign(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("group count=1 n=1 m=1 u=0.5 tmin=2 tmax=2 mode=implicit\n") == 1);
  CHECK(line_of("seed 1\nseed 2\n") == 2);
  CHECK(line_of("seed 1\ngroup count=1 n=1 m=1 u=0.5 tmin=2 tmax=2\n") == 2);
  CHECK(line_of("seed 1\ngroup count=1 n=1 m=1 u=0.5 tmin=2 tmax=2 mode=weekly\n") == 2);
  CHECK(line_of("seed 1\ngroup count=1 n=1 m=1 u=2.5 tmin=2 tmax=2 mode=implicit\n") == 2);
  CHECK(line_of("seed 1\ngroup count=1 n=1 m=1 u=0.4..0.2 tmin=2 tmax=2 mode=implicit\n") ==
        2);
  CHECK(line_of("seed 1\ngroup count=1 n=1 m=1 u=0.5 tmin=1 tmax=2 mode=implicit\n") == 2);
  CHECK(line_of("seed 1\n") == 1);
}

TEST_CASE("instances are reproducible from the campaign alone") {
  Campaign c = parse_campaign(kCampaign);
  double u0 = 0.0, u4 = 0.0;
  TaskSet first = instance_for(c, 0, &u0);
  TaskSet last = instance_for(c, 4, &u4);
  CHECK(u0 == doctest::Approx(0.9));
  CHECK(u4 >= 0.8);
  CHECK(u4 <= 1.6);
  CHECK(first.size() == 2);
  CHECK(last.size() == 3);
  CHECK(serialize_task_set(instance_for(c, 0)) == serialize_task_set(first));
  CHECK_THROWS_AS(instance_for(c, 5), std::out_of_range);
}

TEST_CASE("a campaign run emits one sorted row per instance and algorithm") {
  Campaign c = parse_campaign(kCampaign);
  auto rows = run_campaign(c, {"es", "bw-tba"});
  REQUIRE(rows.size() == 10);
  for (size_t k = 1; k < rows.size(); ++k) {
    auto key = [](const ExperimentRecord& r) { return std::tie(r.instance_id, r.algorithm); };
    CHECK(key(rows[k - 1]) < key(rows[k]));
  }
  CHECK(rows[0].instance_id == "g00_i0000");
  CHECK(rows[0].algorithm == "bw-tba");
  CHECK(rows[9].instance_id == "g01_i0002");
  for (const auto& r : rows) {
    CHECK((r.feasible == "true" || r.feasible == "false"));
    CHECK(r.explored_nodes > 0);
    CHECK(r.seed == 99);
  }
  // Same instance, both algorithms: verdicts agree whenever conclusive.
  for (size_t k = 0; k + 1 < rows.size(); k += 2) {
    REQUIRE(rows[k].instance_id == rows[k + 1].instance_id);
    CHECK(rows[k].feasible == rows[k + 1].feasible);
  }
}

TEST_CASE("parallel workers produce the identical table") {
  Campaign c = parse_campaign(kCampaign);
  auto serial = run_campaign(c, {"es", "edf"}, {}, 1);
  auto parallel = run_campaign(c, {"es", "edf"}, {}, 4);
  REQUIRE(serial.size() == parallel.size());
  for (size_t k = 0; k < serial.size(); ++k) {
    serial[k].wall_time_ms = parallel[k].wall_time_ms = 0.0;
    CHECK(to_csv({serial[k]}) == to_csv({parallel[k]}));
  }
}

TEST_CASE("rejects unknown algorithm names up front") {
  Campaign c = parse_campaign("seed 1\ngroup count=1 n=1 m=1 u=0.5 tmin=2 tmax=2 mode=implicit\n");
  CHECK_THROWS_AS(run_campaign(c, {"es", "quantum"}), std::invalid_argument);
  CHECK_THROWS_AS(run_campaign(c, {}), std::invalid_argument);
}

TEST_CASE("budget overruns are recorded as inconclusive rows, not failures") {
  Campaign c = parse_campaign("seed 3\ngroup count=1 n=3 m=2 u=1.5 tmin=4 tmax=6 mode=constrained\n");
  SolveBudget tiny;
  tiny.max_explored = 2;
  auto rows = run_campaign(c, {"bw-tba"}, tiny);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].feasible == "inconclusive");
}

TEST_CASE("CSV emission is schema-tagged and parses back to the same rows") {
  Campaign c = parse_campaign(kCampaign);
  auto rows = run_campaign(c, {"bw-tba", "edf"});
  std::string csv = to_csv(rows);
  CHECK(csv.rfind("# schema=1 rng=mt19937_64\n", 0) == 0);

  auto back = parse_csv(csv);
  REQUIRE(back.size() == rows.size());
  for (size_t k = 0; k < rows.size(); ++k) {
    CHECK(back[k].instance_id == rows[k].instance_id);
    CHECK(back[k].u_target == rows[k].u_target); // %.17g survives the round trip
    CHECK(back[k].algorithm == rows[k].algorithm);
    CHECK(back[k].feasible == rows[k].feasible);
    CHECK(back[k].explored_nodes == rows[k].explored_nodes);
    CHECK(back[k].iterations == rows[k].iterations);
    CHECK(to_string(back[k].deadline_mode) == to_string(rows[k].deadline_mode));
  }
}

TEST_CASE("CSV parsing rejects corrupted tables") {
  auto line_of = [](const std::string& text) {
    try {
      parse_csv(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("instance,oops\n") == 1);
  std::string header =
      "instance_id,n,m,u_target,t_min,t_max,deadline_mode,seed,algorithm,feasible,"
      "explored_nodes,peak_set_size,iterations,wall_time_ms\n";
  CHECK(line_of(header + "a,1,1,0.5,2,2,implicit,1,es,perhaps,1,1,1,0.0\n") == 2);
  CHECK(line_of(header + "a,1,1,0.5,2,2,implicit,1,es,true,1,1,1\n") == 2);
  CHECK(line_of("") == 0);
}

TEST_CASE("two runs of the same campaign differ only in wall time") {
  Campaign c = parse_campaign(kCampaign);
  auto a = run_campaign(c, {"es", "bw-tba", "edf"});
  auto b = run_campaign(c, {"es", "bw-tba", "edf"});
  REQUIRE(a.size() == b.size());
  for (size_t k = 0; k < a.size(); ++k) {
    a[k].wall_time_ms = b[k].wall_time_ms = 0.0;
  }
  CHECK(to_csv(a) == to_csv(b));
}

TEST_CASE("median explored ratio summarizes paired conclusive rows") {
  std::vector<ExperimentRecord> rows;
  auto push = [&](const char* id, const char* alg, size_t explored, const char* feasible) {
    ExperimentRecord r;
    r.instance_id = id;
    r.algorithm = alg;
    r.explored_nodes = explored;
    r.feasible = feasible;
    rows.push_back(r);
  };
  push("a", "es", 100, "true");
  push("a", "bw-tba", 20, "true");
  push("b", "es", 30, "false");
  push("b", "bw-tba", 10, "false");
  push("c", "es", 999, "inconclusive"); // dropped: not conclusive
  push("c", "bw-tba", 1, "true");
  CHECK(median_explored_ratio(rows, "es", "bw-tba") == doctest::Approx(4.0)); // {5, 3}
  CHECK(median_explored_ratio(rows, "es", "missing") == 0.0);

  std::string digest = summarize(rows);
  CHECK(digest.find("es") != std::string::npos);
  CHECK(digest.find("median explored ratio es/bw-tba") != std::string::npos);
}
