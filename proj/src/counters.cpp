#include "lfol/counters.hpp"

namespace lfol {

Counters aggregate(std::span<const Counters> parts) {
  Counters total;
  for (const Counters& c : parts) total += c;
  return total;
}

}  // namespace lfol
