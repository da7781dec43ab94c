#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lfol/node.hpp"
#include "lfol/ordered_list.hpp"

namespace lfol {

struct Violation {
  enum class Kind {
    sentinel,               // head/tail key changed or sentinel marked
    order,                  // unmarked chain not strictly increasing
    termination,            // chain does not end at the tail
    backward_reachability,  // prev iteration does not reach the head
    marked_reachable,       // marked node still linked after a full sweep
  };
  Kind kind;
  std::string detail;
};

const char* violation_kind_name(Violation::Kind k);

/// Structural check of a quiescent list. Runs one full-range search to
/// unlink leftover marked nodes, so the list is modified. An empty result
/// means every check passed.
template <Variant V, class Sched>
std::vector<Violation> check_structure(OrderedList<V, Sched>& list) {
  using NodeT = typename OrderedList<V, Sched>::NodeType;
  std::vector<Violation> out;
  const std::size_t limit = list.allocated();

  if (list.head()->key != kKeyMin || list.tail()->key != kKeyMax ||
      list.head()->next.load().marked() || list.tail()->next.load().marked()) {
    out.push_back({Violation::Kind::sentinel, "sentinel key or mark changed"});
  }

  auto walk_forward = [&](bool report_marked) {
    const NodeT* n = list.head()->next.load().ref();
    Key last = kKeyMin;
    std::size_t steps = 0;
    while (n != nullptr && n != list.tail() && steps <= limit) {
      const bool marked = n->next.load().marked();
      if (marked && report_marked) {
        out.push_back({Violation::Kind::marked_reachable,
                       "marked node with key " + std::to_string(n->key) + " still linked"});
      }
      if (!marked && !report_marked) {
        if (n->key <= last) {
          out.push_back({Violation::Kind::order, "key " + std::to_string(n->key) +
                                                     " follows key " + std::to_string(last)});
        }
        last = n->key;
      }
      n = n->next.load().ref();
      ++steps;
    }
    if (n != list.tail() && !report_marked) {
      out.push_back({Violation::Kind::termination,
                     "chain from head does not reach tail within " + std::to_string(limit) +
                         " steps"});
    }
    return n == list.tail();
  };

  const bool terminates = walk_forward(false);

  if constexpr (OrderedList<V, Sched>::kDoubly) {
    list.for_each_allocated([&](const NodeT* start) {
      const NodeT* n = start;
      std::size_t steps = 0;
      while (n != nullptr && n != list.head() && steps < limit) {
        n = n->prev.load(std::memory_order_acquire);
        ++steps;
      }
      if (n != list.head()) {
        out.push_back({Violation::Kind::backward_reachability,
                       "prev path from key " + std::to_string(start->key) +
                           " does not reach head within " + std::to_string(limit) + " steps"});
      }
    });
  }

  if (terminates) {
    auto ctx = list.make_context();
    list.pos(kKeyMax - 1, ctx);
    walk_forward(true);
  }
  return out;
}

}  // namespace lfol
