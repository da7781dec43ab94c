#include "lfol/variant.hpp"

#include <string>

namespace lfol {

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::draconic: return "draconic";
    case Variant::singly: return "singly";
    case Variant::doubly: return "doubly";
    case Variant::singly_cursor: return "singly-cursor";
    case Variant::singly_fetch_or: return "singly-fetch-or";
    case Variant::doubly_cursor: return "doubly-cursor";
  }
  return "unknown";
}

std::optional<Variant> parse_variant(std::string_view text) {
  if (text.size() == 1) {
    const char c = text[0];
    if (c >= 'a' && c <= 'f') return kAllVariants[static_cast<std::size_t>(c - 'a')];
    return std::nullopt;
  }
  std::string normalized(text);
  for (char& c : normalized) {
    if (c == '_') c = '-';
  }
  for (Variant v : kAllVariants) {
    if (variant_name(v) == normalized) return v;
  }
  return std::nullopt;
}

}  // namespace lfol
