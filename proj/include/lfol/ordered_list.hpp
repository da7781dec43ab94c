#pragma once

#include <atomic>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <new>
#include <vector>

#include "lfol/counters.hpp"
#include "lfol/link_word.hpp"
#include "lfol/node.hpp"
#include "lfol/node_arena.hpp"
#include "lfol/rng.hpp"
#include "lfol/variant.hpp"

namespace lfol {

inline constexpr std::size_t kCacheLine = 64;

/// Scheduling hook invoked at every traversal step and before every CAS.
/// The default does nothing; stress tests plug in a hook that yields so
/// that operations interleave even on a single core.
struct NoSchedulePoints {
  static void point() noexcept {}
};

/// Per-thread state. Owned by exactly one thread at a time and never shared.
template <class NodeT>
struct alignas(kCacheLine) ThreadContext {
  NodeT* cursor_pred = nullptr;  // predecessor found by the last operation
  NodeT* cursor_curr = nullptr;
  Counters counters;
  Xoshiro256 rng;

  NodeArena<NodeT>* arena = nullptr;
  NodeT* spare = nullptr;  // allocated but never published
  const void* owner = nullptr;
};

template <class NodeT>
struct SearchResult {
  NodeT* pred;
  NodeT* curr;
};

/// Lock-free ordered set of keys as a sorted linked list with marked links.
///
/// All six variants share this template. The variant selects, at compile
/// time, where a search starts, what happens after a failed CAS and
/// whether backward pointers are maintained:
///
///   draconic         every failed CAS restarts the search from the head
///   singly           failed unlink/insert CAS rereads the link and goes on
///                    unless the predecessor itself became marked
///   doubly           as singly, but a restart walks backward pointers
///   singly_cursor    searches start at the per-thread cursor when usable
///   singly_fetch_or  as singly_cursor, marking uses one fetch-or
///   doubly_cursor    cursor start normalized by the backward walk
///
/// Nodes are reclaimed only when the list is destroyed, so stale cursors
/// and backward pointers are always safe to follow.
template <Variant V, class Sched = NoSchedulePoints>
class OrderedList {
 public:
  static constexpr Variant kVariant = V;
  static constexpr bool kDoubly = is_doubly(V);
  static constexpr bool kCursor = uses_cursor(V);

  using NodeType = Node<kDoubly>;
  using Context = ThreadContext<NodeType>;
  using Position = SearchResult<NodeType>;

  OrderedList() {
    head_.key = kKeyMin;
    tail_.key = kKeyMax;
    head_.next.store(Link(&tail_, false), std::memory_order_relaxed);
    tail_.next.store(Link(nullptr, false), std::memory_order_relaxed);
    if constexpr (kDoubly) {
      head_.prev.store(&head_, std::memory_order_relaxed);
      tail_.prev.store(&head_, std::memory_order_relaxed);
    }
    std::atomic_thread_fence(std::memory_order_release);
  }

  ~OrderedList() {
    NodeArena<NodeType>* a = arenas_.load(std::memory_order_acquire);
    while (a != nullptr) {
      NodeArena<NodeType>* next = a->next_registered;
      delete a;
      a = next;
    }
  }

  OrderedList(const OrderedList&) = delete;
  OrderedList& operator=(const OrderedList&) = delete;

  /// Creates a context bound to this list. It must not outlive the list.
  Context make_context(std::uint64_t seed = 0) {
    Context ctx;
    ctx.cursor_pred = &head_;
    ctx.cursor_curr = head_.next.load().ref();
    ctx.rng = Xoshiro256(seed);
    ctx.arena = register_arena();
    ctx.owner = this;
    return ctx;
  }

  bool add(Key key, Context& ctx) {
    require_user_key(key);
    assert(ctx.owner == this);
    auto [pred, curr] = locate(key, ctx);
    NodeType* node = nullptr;
    for (;;) {
      if (curr->key == key) {
        if (node != nullptr) ctx.spare = node;
        return false;
      }
      if (node == nullptr) node = take_node(key, ctx);
      node->next.store(Link(curr, false), std::memory_order_relaxed);
      if constexpr (kDoubly) node->prev.store(pred, std::memory_order_relaxed);

      Sched::point();
      Link expected(curr, false);
      if (pred->next.compare_exchange(expected, Link(node, false))) {
        if constexpr (kDoubly) curr->prev.store(node, std::memory_order_release);
        ++ctx.counters.adds;
        return true;
      }
      ++ctx.counters.fail;
      // Only a marked predecessor forces a restart; a changed reference
      // means the forward scan can go on from the same predecessor.
      NodeType* from = pred;
      if (V == Variant::draconic || expected.marked()) from = restart_point(pred, key, ctx);
      const Position p = scan(from, key, ctx);
      pred = p.pred;
      curr = p.curr;
    }
  }

  bool rem(Key key, Context& ctx) {
    require_user_key(key);
    assert(ctx.owner == this);
    auto [pred, node] = locate(key, ctx);
    for (;;) {
      if (node->key != key) return false;

      Link succ;
      Sched::point();
      if constexpr (V == Variant::draconic) {
        succ = node->next.load().without_mark();
        Link expected = succ;
        if (!node->next.compare_exchange(expected, succ.with_mark())) {
          ++ctx.counters.fail;
          const Position p = scan(restart_point(pred, key, ctx), key, ctx);
          pred = p.pred;
          node = p.curr;
          continue;
        }
      } else if constexpr (V == Variant::singly_fetch_or) {
        succ = node->next.fetch_mark();
        if (succ.marked()) {
          ++ctx.counters.fail;
          return false;
        }
      } else {
        succ = node->next.load();
        for (;;) {
          if (succ.marked()) return false;
          if (node->next.compare_exchange(succ, succ.with_mark())) break;
          ++ctx.counters.fail;
          Sched::point();
        }
      }

      // The node is logically deleted. A failed unlink is left to helpers.
      Sched::point();
      Link expected(node, false);
      if (pred->next.compare_exchange(expected, succ)) {
        if constexpr (kDoubly) succ.ref()->prev.store(pred, std::memory_order_release);
      } else {
        ++ctx.counters.fail;
      }
      ++ctx.counters.rems;
      return true;
    }
  }

  /// Wait-free membership test: no CAS, no unlinking, no restart.
  bool con(Key key, Context& ctx) {
    require_user_key(key);
    assert(ctx.owner == this);
    NodeType* curr = &head_;
    if constexpr (V == Variant::doubly_cursor) {
      curr = ctx.cursor_pred;
      while (curr->next.load().marked() || key < curr->key) {
        curr = curr->prev.load(std::memory_order_acquire);
        ++ctx.counters.cons;
      }
    } else if constexpr (kCursor) {
      NodeType* c = ctx.cursor_pred;
      if (!c->next.load().marked() && c->key <= key) curr = c;
    }

    NodeType* pred = curr;
    while (curr->key < key) {
      Sched::point();
      pred = curr;
      curr = curr->next.load().ref();
      ++ctx.counters.cons;
    }
    ctx.cursor_pred = pred;
    ctx.cursor_curr = curr;
    return curr->key == key && !curr->next.load().marked();
  }

  /// Locates (pred, curr) with pred.key < key <= curr.key, unlinking every
  /// marked node met on the way.
  Position pos(Key key, Context& ctx) {
    require_user_key(key);
    assert(ctx.owner == this);
    return locate(key, ctx);
  }

  NodeType* head() { return &head_; }
  const NodeType* head() const { return &head_; }
  NodeType* tail() { return &tail_; }
  const NodeType* tail() const { return &tail_; }

  // Quiescent-only helpers below.

  /// Keys of the unmarked nodes reachable from the head, in list order.
  std::vector<Key> snapshot() const {
    std::vector<Key> keys;
    for (const NodeType* n = head_.next.load().ref(); n != &tail_; n = n->next.load().ref()) {
      if (!n->next.load().marked()) keys.push_back(n->key);
    }
    return keys;
  }

  /// Visits every node ever allocated for this list, sentinels included.
  template <class Fn>
  void for_each_allocated(Fn&& fn) const {
    fn(&head_);
    fn(&tail_);
    for (const auto* a = arenas_.load(std::memory_order_acquire); a != nullptr;
         a = a->next_registered) {
      a->for_each([&](const NodeType* n) { fn(n); });
    }
  }

  std::size_t allocated() const {
    std::size_t total = 2;
    for (const auto* a = arenas_.load(std::memory_order_acquire); a != nullptr;
         a = a->next_registered) {
      total += a->size();
    }
    return total;
  }

  /// Test hook: sets the mark on the first reachable node holding `key`
  /// without unlinking it. Returns false when no such node exists.
  bool debug_mark(Key key) {
    for (NodeType* n = head_.next.load().ref(); n != &tail_; n = n->next.load().ref()) {
      if (n->key == key && !n->next.load().marked()) {
        n->next.fetch_mark();
        return true;
      }
    }
    return false;
  }

  /// Test hook: links a node directly behind the head, ignoring key order.
  void debug_splice_front(Key key) {
    if (debug_arena_ == nullptr) debug_arena_ = register_arena();
    NodeType* n = debug_arena_->allocate();
    n->key = key;
    NodeType* first = head_.next.load().ref();
    n->next.store(Link(first, false));
    if constexpr (kDoubly) n->prev.store(&head_);
    head_.next.store(Link(n, false));
    if constexpr (kDoubly) first->prev.store(n);
  }

 private:
  using Link = LinkWord<NodeType>;

  NodeArena<NodeType>* register_arena() {
    auto* a = new NodeArena<NodeType>();
    NodeArena<NodeType>* top = arenas_.load(std::memory_order_relaxed);
    do {
      a->next_registered = top;
    } while (!arenas_.compare_exchange_weak(top, a, std::memory_order_acq_rel,
                                            std::memory_order_relaxed));
    return a;
  }

  NodeType* take_node(Key key, Context& ctx) {
    NodeType* n = ctx.spare;
    ctx.spare = nullptr;
    if (n == nullptr) n = ctx.arena->allocate();
    n->key = key;
    return n;
  }

  Position locate(Key key, Context& ctx) { return scan(search_start(key, ctx), key, ctx); }

  NodeType* search_start(Key key, Context& ctx) {
    if constexpr (V == Variant::doubly_cursor) {
      return walk_back(ctx.cursor_pred, key, ctx);
    } else if constexpr (kCursor) {
      return cursor_start(key, ctx);
    } else {
      return &head_;
    }
  }

  /// A cursor is only a valid start if it is unmarked and strictly smaller.
  NodeType* cursor_start(Key key, Context& ctx) {
    NodeType* c = ctx.cursor_pred;
    if (c->next.load().marked() || key <= c->key) return &head_;
    return c;
  }

  /// Follows backward pointers until an unmarked node with a smaller key.
  /// Terminates at the head at the latest: head.prev == head, and head is
  /// never marked and smaller than every user key.
  NodeType* walk_back(NodeType* pred, Key key, Context& ctx) {
    static_assert(kDoubly);
    while (pred->next.load().marked() || key <= pred->key) {
      pred = pred->prev.load(std::memory_order_acquire);
      ++ctx.counters.trav;
    }
    return pred;
  }

  NodeType* restart_point(NodeType* pred, Key key, Context& ctx) {
    ++ctx.counters.rtry;
    if constexpr (kDoubly) {
      return walk_back(pred, key, ctx);
    } else if constexpr (kCursor) {
      return cursor_start(key, ctx);
    } else {
      return &head_;
    }
  }

  /// Forward search from `pred`, which must satisfy pred.key < key.
  Position scan(NodeType* pred, Key key, Context& ctx) {
    Counters& c = ctx.counters;
    for (;;) {
      NodeType* curr = pred->next.load().ref();
      ++c.trav;
      bool restart = false;
      for (;;) {
        Sched::point();
        Link succ = curr->next.load();
        while (succ.marked()) {
          Link expected(curr, false);
          if (pred->next.compare_exchange(expected, succ.without_mark())) {
            if constexpr (kDoubly) succ.ref()->prev.store(pred, std::memory_order_release);
            curr = succ.ref();
          } else {
            ++c.fail;
            if (V == Variant::draconic || expected.marked()) {
              restart = true;
              break;
            }
            curr = expected.ref();
          }
          ++c.trav;
          Sched::point();
          succ = curr->next.load();
        }
        if (restart) break;

        if constexpr (kDoubly) {
          if (curr->prev.load(std::memory_order_relaxed) != pred) {
            curr->prev.store(pred, std::memory_order_release);
          }
        }

        if (key <= curr->key) {
          ctx.cursor_pred = pred;
          ctx.cursor_curr = curr;
          return {pred, curr};
        }
        pred = curr;
        curr = succ.ref();
        ++c.trav;
      }
      pred = restart_point(pred, key, ctx);
    }
  }

  alignas(kCacheLine) NodeType head_;
  alignas(kCacheLine) NodeType tail_;
  std::atomic<NodeArena<NodeType>*> arenas_{nullptr};
  NodeArena<NodeType>* debug_arena_ = nullptr;
};

}  // namespace lfol
