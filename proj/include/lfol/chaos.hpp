#pragma once

#include <cstdint>
#include <thread>

#include "lfol/rng.hpp"

namespace lfol {

/// Schedule-point hook for OrderedList that yields the processor at about
/// one in `one_in` points. State is thread-local; each worker calls
/// configure() before use. With one_in == 0 it does nothing.
struct YieldingSchedulePoints {
  static inline thread_local Xoshiro256 rng{0};
  static inline thread_local std::uint64_t one_in = 0;

  static void configure(std::uint64_t seed, std::uint64_t rate) {
    rng = Xoshiro256(seed);
    one_in = rate;
  }

  static void point() {
    if (one_in != 0 && rng.below(one_in) == 0) std::this_thread::yield();
  }
};

}  // namespace lfol
