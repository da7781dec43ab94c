#pragma once

#include <cstdint>
#include <memory>
#include <variant>
#include <vector>

#include "lfol/counters.hpp"
#include "lfol/ordered_list.hpp"
#include "lfol/structure.hpp"
#include "lfol/variant.hpp"

namespace lfol {

/// Runtime-selected list variant. Each call dispatches to the matching
/// OrderedList instantiation; hot loops should use OrderedList directly.
class OrderedSet {
 public:
  /// Per-thread handle. Use one per thread; it must not outlive the set.
  class Context {
   public:
    const Counters& counters() const;
    Counters& counters();

   private:
    friend class OrderedSet;
    std::variant<ThreadContext<Node<false>>, ThreadContext<Node<true>>> impl_;
  };

  explicit OrderedSet(Variant v);
  OrderedSet(OrderedSet&&) noexcept = default;
  OrderedSet& operator=(OrderedSet&&) noexcept = default;
  ~OrderedSet();

  Variant variant() const { return variant_; }

  Context make_context(std::uint64_t seed = 0);

  bool add(Key key, Context& ctx);
  bool rem(Key key, Context& ctx);
  bool con(Key key, Context& ctx);

  /// Quiescent use only.
  std::vector<Key> snapshot() const;
  std::vector<Violation> check_structure();
  std::size_t allocated() const;

 private:
  template <Variant V>
  using ListPtr = std::unique_ptr<OrderedList<V>>;

  using AnyList =
      std::variant<ListPtr<Variant::draconic>, ListPtr<Variant::singly>, ListPtr<Variant::doubly>,
                   ListPtr<Variant::singly_cursor>, ListPtr<Variant::singly_fetch_or>,
                   ListPtr<Variant::doubly_cursor>>;

  template <class Fn>
  decltype(auto) with_list(Context& ctx, Fn&& fn);

  Variant variant_;
  AnyList list_;
};

inline OrderedSet new_list(Variant v) { return OrderedSet(v); }

}  // namespace lfol
