#include "lfol/ordered_set.hpp"

#include <type_traits>

namespace lfol {

const char* violation_kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::sentinel: return "sentinel";
    case Violation::Kind::order: return "order";
    case Violation::Kind::termination: return "termination";
    case Violation::Kind::backward_reachability: return "backward-reachability";
    case Violation::Kind::marked_reachable: return "marked-reachable";
  }
  return "unknown";
}

const Counters& OrderedSet::Context::counters() const {
  return std::visit([](const auto& c) -> const Counters& { return c.counters; }, impl_);
}

Counters& OrderedSet::Context::counters() {
  return std::visit([](auto& c) -> Counters& { return c.counters; }, impl_);
}

OrderedSet::OrderedSet(Variant v)
    : variant_(v), list_(dispatch_variant(v, [](auto tag) -> AnyList {
        return std::make_unique<OrderedList<decltype(tag)::value>>();
      })) {}

OrderedSet::~OrderedSet() = default;

OrderedSet::Context OrderedSet::make_context(std::uint64_t seed) {
  Context ctx;
  std::visit([&](auto& list) { ctx.impl_ = list->make_context(seed); }, list_);
  return ctx;
}

template <class Fn>
decltype(auto) OrderedSet::with_list(Context& ctx, Fn&& fn) {
  return std::visit(
      [&](auto& list) -> decltype(auto) {
        using ListT = std::remove_reference_t<decltype(*list)>;
        auto& typed = std::get<typename ListT::Context>(ctx.impl_);
        return fn(*list, typed);
      },
      list_);
}

bool OrderedSet::add(Key key, Context& ctx) {
  return with_list(ctx, [key](auto& list, auto& c) { return list.add(key, c); });
}

bool OrderedSet::rem(Key key, Context& ctx) {
  return with_list(ctx, [key](auto& list, auto& c) { return list.rem(key, c); });
}

bool OrderedSet::con(Key key, Context& ctx) {
  return with_list(ctx, [key](auto& list, auto& c) { return list.con(key, c); });
}

std::vector<Key> OrderedSet::snapshot() const {
  return std::visit([](const auto& list) { return list->snapshot(); }, list_);
}

std::vector<Violation> OrderedSet::check_structure() {
  return std::visit([](auto& list) { return lfol::check_structure(*list); }, list_);
}

std::size_t OrderedSet::allocated() const {
  return std::visit([](const auto& list) { return list->allocated(); }, list_);
}

}  // namespace lfol
