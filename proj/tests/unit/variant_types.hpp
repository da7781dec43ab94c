#pragma once

#include <gtest/gtest.h>

#include <string>

#include "lfol/variant.hpp"

namespace lfol::testing {

template <Variant V>
struct Tag {
  static constexpr Variant value = V;
};

using AllVariants =
    ::testing::Types<Tag<Variant::draconic>, Tag<Variant::singly>, Tag<Variant::doubly>,
                     Tag<Variant::singly_cursor>, Tag<Variant::singly_fetch_or>,
                     Tag<Variant::doubly_cursor>>;

using DoublyVariants = ::testing::Types<Tag<Variant::doubly>, Tag<Variant::doubly_cursor>>;

struct VariantNames {
  template <class T>
  static std::string GetName(int) {
    std::string name(variant_name(T::value));
    for (char& c : name) {
      if (c == '-') c = '_';
    }
    return name;
  }
};

}  // namespace lfol::testing
