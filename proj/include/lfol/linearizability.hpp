#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>

#include "lfol/history.hpp"

namespace lfol {

/// Upper bound on completed operations the exhaustive checker accepts.
inline constexpr std::size_t kMaxCheckedOps = 64;

class HistoryTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exhaustive search for a sequential order of the operations that
/// respects real-time order and replays on a sequential set that starts
/// empty. Visited (linearized-subset, set-state) pairs
/// are memoized. Throws HistoryTooLarge above kMaxCheckedOps operations and
/// std::invalid_argument for malformed histories.
bool check_linearizable(std::span<const HistoryEvent> history);

}  // namespace lfol
