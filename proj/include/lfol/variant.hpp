#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <type_traits>

namespace lfol {

/// The six list implementations, in the order a) through f).
enum class Variant : std::uint8_t {
  draconic,
  singly,
  doubly,
  singly_cursor,
  singly_fetch_or,
  doubly_cursor,
};

inline constexpr std::array<Variant, 6> kAllVariants = {
    Variant::draconic,      Variant::singly,          Variant::doubly,
    Variant::singly_cursor, Variant::singly_fetch_or, Variant::doubly_cursor,
};

constexpr bool is_doubly(Variant v) {
  return v == Variant::doubly || v == Variant::doubly_cursor;
}

constexpr bool uses_cursor(Variant v) {
  return v == Variant::singly_cursor || v == Variant::singly_fetch_or ||
         v == Variant::doubly_cursor;
}

constexpr char variant_letter(Variant v) { return static_cast<char>('a' + static_cast<int>(v)); }

std::string_view variant_name(Variant v);

/// Accepts "doubly-cursor", "doubly_cursor" or the letter "f".
std::optional<Variant> parse_variant(std::string_view text);

template <Variant V>
using VariantTag = std::integral_constant<Variant, V>;

/// Calls `fn(VariantTag<v>{})` so templated code can be selected at runtime.
template <class Fn>
decltype(auto) dispatch_variant(Variant v, Fn&& fn) {
  switch (v) {
    case Variant::draconic: return fn(VariantTag<Variant::draconic>{});
    case Variant::singly: return fn(VariantTag<Variant::singly>{});
    case Variant::doubly: return fn(VariantTag<Variant::doubly>{});
    case Variant::singly_cursor: return fn(VariantTag<Variant::singly_cursor>{});
    case Variant::singly_fetch_or: return fn(VariantTag<Variant::singly_fetch_or>{});
    case Variant::doubly_cursor: break;
  }
  return fn(VariantTag<Variant::doubly_cursor>{});
}

}  // namespace lfol
