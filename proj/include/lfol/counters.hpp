#pragma once

#include <cstdint>
#include <span>

namespace lfol {

/// Per-thread event counts. Columns match the benchmark report.
struct Counters {
  std::uint64_t adds = 0;  // successful add operations
  std::uint64_t rems = 0;  // successful rem operations
  std::uint64_t cons = 0;  // link follows inside con traversals
  std::uint64_t trav = 0;  // link follows inside searches, backward steps included
  std::uint64_t fail = 0;  // failed CAS, or fetch-or that found the mark set
  std::uint64_t rtry = 0;  // search restarts

  Counters& operator+=(const Counters& o) {
    adds += o.adds;
    rems += o.rems;
    cons += o.cons;
    trav += o.trav;
    fail += o.fail;
    rtry += o.rtry;
    return *this;
  }

  friend Counters operator+(Counters a, const Counters& b) { return a += b; }
  friend bool operator==(const Counters&, const Counters&) = default;
};

/// Field-wise sum. Only call after every owning thread has joined.
Counters aggregate(std::span<const Counters> parts);

template <class Range>
Counters aggregate_contexts(const Range& contexts) {
  Counters total;
  for (const auto& ctx : contexts) total += ctx.counters;
  return total;
}

}  // namespace lfol
