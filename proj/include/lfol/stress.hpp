#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lfol/counters.hpp"
#include "lfol/history.hpp"
#include "lfol/structure.hpp"
#include "lfol/variant.hpp"

namespace lfol {

struct StressConfig {
  Variant variant = Variant::draconic;
  unsigned threads = 4;
  std::uint64_t ops_per_thread = 8;
  Key keyrange = 4;  // keys drawn from [1, keyrange]
  std::uint64_t seed = 1;
  unsigned add_pct = 34;
  unsigned rem_pct = 33;
  bool record_history = true;
  bool check_linearizability = true;  // requires record_history
  std::uint64_t chaos_one_in = 4;     // yield at ~1/N schedule points, 0 = off
};

struct StressResult {
  std::vector<HistoryEvent> history;
  std::vector<Violation> structure;
  std::vector<std::string> alternation;  // per-key alternation violations
  std::vector<std::string> membership;   // final set vs success log
  std::optional<bool> linearizable;
  Counters counters;
  std::vector<Key> final_keys;

  bool ok() const;
  std::string describe() const;
};

/// Runs a concurrent random op mix, then the quiescent checks.
StressResult stress(const StressConfig& cfg);

}  // namespace lfol
