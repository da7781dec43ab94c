#pragma once

#include <atomic>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "lfol/link_word.hpp"

namespace lfol {

using Key = std::int64_t;

/// Reserved for the head and tail sentinels.
inline constexpr Key kKeyMin = std::numeric_limits<Key>::min();
inline constexpr Key kKeyMax = std::numeric_limits<Key>::max();

constexpr bool is_user_key(Key key) { return kKeyMin < key && key < kKeyMax; }

inline void require_user_key(Key key) {
  if (!is_user_key(key)) {
    throw std::out_of_range("key " + std::to_string(key) + " is reserved for sentinels");
  }
}

struct NoPrev {};

/// List item. `prev` only exists for the doubly linked variants.
template <bool Doubly>
struct Node {
  using PrevField = std::conditional_t<Doubly, std::atomic<Node*>, NoPrev>;

  Key key = 0;
  AtomicLink<Node> next;
  [[no_unique_address]] PrevField prev{};
};

static_assert(alignof(Node<false>) >= 2 && alignof(Node<true>) >= 2);
static_assert(sizeof(Node<false>) == 2 * sizeof(void*));

}  // namespace lfol
