#include "schedgame/tasks.hpp"

#include <fstream>
#include <sstream>

namespace schedgame {

namespace {

// Strips a trailing comment and surrounding whitespace.
std::string significant_part(std::string_view line) {
  auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = line.find_last_not_of(" \t\r");
  return std::string(line.substr(b, e - b + 1));
}

int parse_int_field(std::istringstream& in, int lineno, const char* what) {
  long long v;
  if (!(in >> v)) throw ParseError(lineno, std::string("expected integer ") + what);
  if (v < -1000000000LL || v > 1000000000LL)
    throw ParseError(lineno, std::string(what) + " out of range");
  return static_cast<int>(v);
}

} // namespace

TaskSet parse_task_set(std::string_view text) {
  TaskSet ts;
  ts.cpus = 0;
  bool saw_cpus = false;

  int lineno = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineno;

    std::string line = significant_part(raw);
    if (line.empty()) continue;

    std::istringstream in(line);
    std::string keyword;
    in >> keyword;
    if (keyword == "cpus") {
      if (saw_cpus) throw ParseError(lineno, "duplicate cpus line");
      ts.cpus = parse_int_field(in, lineno, "processor count");
      if (ts.cpus < 1) throw ParseError(lineno, "processor count must be positive");
      saw_cpus = true;
    } else if (keyword == "task") {
      if (!saw_cpus) throw ParseError(lineno, "task line before cpus line");
      SporadicTask t;
      t.wcet = parse_int_field(in, lineno, "wcet");
      t.deadline = parse_int_field(in, lineno, "deadline");
      t.min_interarrival = parse_int_field(in, lineno, "min interarrival");
      if (t.wcet < 1) throw ParseError(lineno, "wcet must be positive");
      if (t.deadline < 1) throw ParseError(lineno, "deadline must be positive");
      if (t.min_interarrival < 1)
        throw ParseError(lineno, "min interarrival must be positive");
      if (t.wcet > t.deadline) throw ParseError(lineno, "wcet exceeds deadline");
      ts.tasks.push_back(t);
    } else {
      throw ParseError(lineno, "unknown directive '" + keyword + "'");
    }
    std::string trailing;
    if (in >> trailing) throw ParseError(lineno, "trailing tokens");
  }

  if (!saw_cpus) throw ParseError(lineno, "missing cpus line");
  if (ts.tasks.empty()) throw ParseError(lineno, "no tasks");
  return ts;
}

TaskSet load_task_set(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_task_set(buf.str());
}

std::string serialize_task_set(const TaskSet& ts) {
  std::ostringstream out;
  out << "cpus " << ts.cpus << "\n";
  for (const auto& t : ts.tasks)
    out << "task " << t.wcet << " " << t.deadline << " " << t.min_interarrival << "\n";
  return out.str();
}

void validate(const TaskSet& ts) {
  if (ts.cpus < 1) throw std::invalid_argument("cpus must be positive");
  if (ts.tasks.empty()) throw std::invalid_argument("task set is empty");
  for (const auto& t : ts.tasks) {
    if (t.wcet < 1 || t.deadline < 1 || t.min_interarrival < 1)
      throw std::invalid_argument("task fields must be positive");
    if (t.wcet > t.deadline) throw std::invalid_argument("wcet exceeds deadline");
  }
}

Rational utilization(const TaskSet& ts) {
  Rational sum(0);
  for (const auto& t : ts.tasks) sum += Rational(t.wcet, t.min_interarrival);
  return sum;
}

} // namespace schedgame
