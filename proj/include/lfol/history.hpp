#pragma once

#include <atomic>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lfol/node.hpp"
#include "lfol/oracle.hpp"

namespace lfol {

enum class Phase : std::uint8_t { invoke, respond };

struct HistoryEvent {
  unsigned thread = 0;
  OpKind op = OpKind::con;
  Key key = 0;
  Phase phase = Phase::invoke;
  bool result = false;  // meaningful for respond events only
  std::uint64_t stamp = 0;

  friend bool operator==(const HistoryEvent&, const HistoryEvent&) = default;
};

/// One completed operation, built by pairing an invoke with its respond.
struct CompletedOp {
  unsigned thread;
  OpKind op;
  Key key;
  bool result;
  std::uint64_t invoke;
  std::uint64_t respond;
};

/// Pairs events per thread. Throws std::invalid_argument when the history
/// is malformed (unmatched invoke, respond without invoke, stamps out of
/// order, op or key mismatch).
std::vector<CompletedOp> pair_events(std::span<const HistoryEvent> history);

/// Line format, one event per line: `thread op key phase result stamp`,
/// where result is `-` for invoke events. Lines starting with '#' are
/// comments.
void write_history(std::ostream& out, std::span<const HistoryEvent> history);
std::vector<HistoryEvent> read_history(std::istream& in);

/// Records events with stamps from one shared atomic counter. Each thread
/// appends to its own log; merge() is called after all threads join.
class HistoryRecorder {
 public:
  explicit HistoryRecorder(unsigned threads) : logs_(threads) {}

  std::uint64_t invoke(unsigned thread, OpKind op, Key key) {
    const std::uint64_t s = clock_.fetch_add(1, std::memory_order_acq_rel);
    logs_[thread].push_back({thread, op, key, Phase::invoke, false, s});
    return s;
  }

  void respond(unsigned thread, OpKind op, Key key, bool result) {
    const std::uint64_t s = clock_.fetch_add(1, std::memory_order_acq_rel);
    logs_[thread].push_back({thread, op, key, Phase::respond, result, s});
  }

  std::vector<HistoryEvent> merge() const;

 private:
  std::atomic<std::uint64_t> clock_{0};
  std::vector<std::vector<HistoryEvent>> logs_;
};

/// Necessary condition for the successful adds and rems of every key to
/// alternate (add first) in some order consistent with real time. At every
/// stamp t: adds responded <= rems invoked + 1 and rems responded <= adds
/// invoked. Returns one message per violation.
std::vector<std::string> check_alternation(std::span<const HistoryEvent> history);

}  // namespace lfol
