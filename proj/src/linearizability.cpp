#include "lfol/linearizability.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace lfol {

namespace {

struct StateHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& s) const {
    return std::hash<std::uint64_t>{}(s.first * 0x9e3779b97f4a7c15ULL ^ s.second);
  }
};

class Search {
 public:
  explicit Search(std::vector<CompletedOp> ops) : ops_(std::move(ops)) {
    const std::size_t n = ops_.size();
    full_ = n == 64 ? ~0ULL : (1ULL << n) - 1;

    std::vector<Key> keys;
    for (const auto& op : ops_) keys.push_back(op.key);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    for (const auto& op : ops_) {
      key_bit_.push_back(1ULL << (std::lower_bound(keys.begin(), keys.end(), op.key) - keys.begin()));
    }

    must_follow_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (ops_[j].respond < ops_[i].invoke) must_follow_[i] |= 1ULL << j;
      }
    }
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::uint64_t done, std::uint64_t present) {
    if (done == full_) return true;
    if (!dead_.insert({done, present}).second) return false;
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const std::uint64_t bit = 1ULL << i;
      if ((done & bit) || (must_follow_[i] & ~done)) continue;
      const CompletedOp& op = ops_[i];
      const bool in = (present & key_bit_[i]) != 0;
      std::uint64_t next = present;
      bool expected = false;
      switch (op.op) {
        case OpKind::add:
          expected = !in;
          next |= key_bit_[i];
          break;
        case OpKind::rem:
          expected = in;
          next &= ~key_bit_[i];
          break;
        case OpKind::con:
          expected = in;
          break;
      }
      if (expected != op.result) continue;
      if (extend(done | bit, next)) return true;
    }
    return false;
  }

  std::vector<CompletedOp> ops_;
  std::vector<std::uint64_t> key_bit_;
  std::vector<std::uint64_t> must_follow_;
  std::uint64_t full_ = 0;
  std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, StateHash> dead_;
};

}  // namespace

bool check_linearizable(std::span<const HistoryEvent> history) {
  std::vector<CompletedOp> ops = pair_events(history);
  if (ops.size() > kMaxCheckedOps) {
    throw HistoryTooLarge("history has " + std::to_string(ops.size()) +
                          " operations; the exhaustive checker accepts at most " +
                          std::to_string(kMaxCheckedOps));
  }
  return Search(std::move(ops)).run();
}

}  // namespace lfol
