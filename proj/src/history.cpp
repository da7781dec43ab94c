#include "lfol/history.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lfol {

namespace {

OpKind parse_op(const std::string& s, std::size_t line) {
  if (s == "add") return OpKind::add;
  if (s == "rem") return OpKind::rem;
  if (s == "con") return OpKind::con;
  throw std::invalid_argument("line " + std::to_string(line) + ": unknown op '" + s + "'");
}

}  // namespace

std::vector<CompletedOp> pair_events(std::span<const HistoryEvent> history) {
  std::vector<HistoryEvent> sorted(history.begin(), history.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const HistoryEvent& a, const HistoryEvent& b) { return a.stamp < b.stamp; });

  std::map<unsigned, CompletedOp> open;
  std::vector<CompletedOp> done;
  for (const HistoryEvent& e : sorted) {
    if (e.phase == Phase::invoke) {
      if (open.contains(e.thread)) {
        throw std::invalid_argument("thread " + std::to_string(e.thread) +
                                    " invokes before its previous op responded");
      }
      open[e.thread] = {e.thread, e.op, e.key, false, e.stamp, 0};
      continue;
    }
    auto it = open.find(e.thread);
    if (it == open.end()) {
      throw std::invalid_argument("respond without invoke on thread " + std::to_string(e.thread));
    }
    CompletedOp op = it->second;
    if (op.op != e.op || op.key != e.key) {
      throw std::invalid_argument("respond does not match invoke on thread " +
                                  std::to_string(e.thread));
    }
    if (e.stamp <= op.invoke) throw std::invalid_argument("respond stamp not after invoke");
    op.result = e.result;
    op.respond = e.stamp;
    done.push_back(op);
    open.erase(it);
  }
  if (!open.empty()) throw std::invalid_argument("history has pending invocations");
  return done;
}

void write_history(std::ostream& out, std::span<const HistoryEvent> history) {
  for (const HistoryEvent& e : history) {
    out << e.thread << ' ' << op_name(e.op) << ' ' << e.key << ' '
        << (e.phase == Phase::invoke ? "invoke" : "respond") << ' '
        << (e.phase == Phase::invoke ? "-" : (e.result ? "1" : "0")) << ' ' << e.stamp << '\n';
  }
}

std::vector<HistoryEvent> read_history(std::istream& in) {
  std::vector<HistoryEvent> events;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    HistoryEvent e;
    std::string op, phase, result;
    if (!(fields >> e.thread >> op >> e.key >> phase >> result >> e.stamp)) {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected 6 fields");
    }
    e.op = parse_op(op, lineno);
    if (phase == "invoke") {
      e.phase = Phase::invoke;
    } else if (phase == "respond") {
      e.phase = Phase::respond;
      if (result != "0" && result != "1") {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": result must be 0 or 1");
      }
      e.result = result == "1";
    } else {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": unknown phase '" +
                                  phase + "'");
    }
    events.push_back(e);
  }
  return events;
}

std::vector<HistoryEvent> HistoryRecorder::merge() const {
  std::vector<HistoryEvent> all;
  for (const auto& log : logs_) all.insert(all.end(), log.begin(), log.end());
  std::sort(all.begin(), all.end(),
            [](const HistoryEvent& a, const HistoryEvent& b) { return a.stamp < b.stamp; });
  return all;
}

std::vector<std::string> check_alternation(std::span<const HistoryEvent> history) {
  struct Tally {
    std::uint64_t adds_invoked = 0, adds_responded = 0;
    std::uint64_t rems_invoked = 0, rems_responded = 0;
  };
  // Invocations are counted when the call could still succeed; responses
  // only when it did. Events are processed in stamp order.
  std::vector<CompletedOp> ops = pair_events(history);
  struct Edge {
    std::uint64_t stamp;
    bool is_respond;
    OpKind op;
    Key key;
  };
  std::vector<Edge> edges;
  for (const CompletedOp& op : ops) {
    if (op.op == OpKind::con || !op.result) continue;
    edges.push_back({op.invoke, false, op.op, op.key});
    edges.push_back({op.respond, true, op.op, op.key});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.stamp < b.stamp; });

  std::map<Key, Tally> tallies;
  std::vector<std::string> problems;
  for (const Edge& e : edges) {
    Tally& t = tallies[e.key];
    if (e.op == OpKind::add) {
      (e.is_respond ? t.adds_responded : t.adds_invoked)++;
    } else {
      (e.is_respond ? t.rems_responded : t.rems_invoked)++;
    }
    if (t.adds_responded > t.rems_invoked + 1) {
      problems.push_back("key " + std::to_string(e.key) + ": two successful adds without a rem (stamp " +
                         std::to_string(e.stamp) + ")");
    }
    if (t.rems_responded > t.adds_invoked) {
      problems.push_back("key " + std::to_string(e.key) +
                         ": successful rem without a preceding add (stamp " +
                         std::to_string(e.stamp) + ")");
    }
  }
  return problems;
}

}  // namespace lfol
