#include <gtest/gtest.h>

#include <atomic>
#include <thread>
#include <vector>

#include "lfol/link_word.hpp"
#include "lfol/node.hpp"
#include "lfol/ordered_list.hpp"
#include "lfol/rng.hpp"

namespace lfol {
namespace {

using SNode = Node<false>;

TEST(LinkWord, RoundTripsSentinelUnmarked) {
  SNode tail;
  const auto w = make_link(&tail, false);
  EXPECT_EQ(ref_of(w), &tail);
  EXPECT_FALSE(mark_of(w));
}

TEST(LinkWord, RoundTripsMarked) {
  SNode n;
  const auto w = make_link(&n, true);
  EXPECT_EQ(ref_of(w), &n);
  EXPECT_TRUE(mark_of(w));
  EXPECT_EQ(w.without_mark(), make_link(&n, false));
  EXPECT_EQ(w.without_mark().with_mark(), w);
}

TEST(LinkWord, RandomPairsRoundTrip) {
  std::vector<SNode> pool(1000);
  Xoshiro256 rng(7);
  for (int i = 0; i < 1000; ++i) {
    SNode* r = &pool[rng.below(pool.size())];
    const bool b = rng.below(2) == 1;
    const auto w = make_link(r, b);
    ASSERT_EQ(ref_of(w), r);
    ASSERT_EQ(mark_of(w), b);
  }
}

TEST(LinkWord, NullReferenceIsRepresentable) {
  const auto w = make_link<SNode>(nullptr, true);
  EXPECT_EQ(w.ref(), nullptr);
  EXPECT_TRUE(w.marked());
}

TEST(AtomicLink, CompareExchangeReportsObservedWord) {
  SNode a, b;
  AtomicLink<SNode> cell(make_link(&a, false));
  auto expected = make_link(&b, false);
  EXPECT_FALSE(cell.compare_exchange(expected, make_link(&b, true)));
  EXPECT_EQ(expected, make_link(&a, false));
  EXPECT_TRUE(cell.compare_exchange(expected, make_link(&a, true)));
  EXPECT_TRUE(cell.load().marked());
}

TEST(AtomicLink, FetchMarkReturnsPriorWord) {
  SNode a;
  AtomicLink<SNode> cell(make_link(&a, false));
  EXPECT_FALSE(cell.fetch_mark().marked());
  const auto second = cell.fetch_mark();
  EXPECT_TRUE(second.marked());
  EXPECT_EQ(second.ref(), &a);
}

TEST(AtomicLink, FetchOrLoweringIsReported) {
  const auto l = fetch_or_lowering();
  EXPECT_TRUE(l == FetchOrLowering::native || l == FetchOrLowering::cas_loop);
#if defined(__x86_64__)
  EXPECT_EQ(l, FetchOrLowering::cas_loop);
#endif
}

TEST(MarkMonotonicity, SamplerNeverSeesUnmark) {
  OrderedList<Variant::singly> list;
  auto writer = list.make_context(1);
  constexpr Key kKeys = 64;
  for (Key k = 1; k <= kKeys; ++k) list.add(k, writer);

  std::vector<const Node<false>*> nodes;
  for (auto* n = list.head()->next.load().ref(); n != list.tail(); n = n->next.load().ref()) {
    nodes.push_back(n);
  }

  std::atomic<bool> done{false};
  std::atomic<int> regressions{0};
  std::thread sampler([&] {
    std::vector<bool> seen(nodes.size(), false);
    while (!done.load(std::memory_order_acquire)) {
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        const bool m = nodes[i]->next.load().marked();
        if (seen[i] && !m) regressions.fetch_add(1);
        seen[i] = seen[i] || m;
      }
    }
  });
  for (int round = 0; round < 200; ++round) {
    for (Key k = 1; k <= kKeys; ++k) {
      list.rem(k, writer);
      list.add(k, writer);
    }
  }
  done.store(true, std::memory_order_release);
  sampler.join();
  EXPECT_EQ(regressions.load(), 0);
}

}  // namespace
}  // namespace lfol
