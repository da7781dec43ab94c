#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "lfol/history.hpp"
#include "lfol/linearizability.hpp"
#include "lfol/oracle.hpp"
#include "lfol/ordered_list.hpp"
#include "lfol/rng.hpp"
#include "lfol/structure.hpp"

namespace lfol {
namespace {

HistoryEvent inv(unsigned t, OpKind op, Key k, std::uint64_t s) {
  return {t, op, k, Phase::invoke, false, s};
}
HistoryEvent res(unsigned t, OpKind op, Key k, bool r, std::uint64_t s) {
  return {t, op, k, Phase::respond, r, s};
}

TEST(Oracle, SetSemantics) {
  const std::vector<ScriptOp> script{{OpKind::add, 5},
                                     {OpKind::add, 5},
                                     {OpKind::con, 5},
                                     {OpKind::rem, 5},
                                     {OpKind::con, 5}};
  EXPECT_EQ(oracle_replay(script), (std::vector<bool>{true, false, true, true, false}));
}

TEST(Oracle, EmptyScript) { EXPECT_TRUE(oracle_replay({}).empty()); }

TEST(Oracle, RandomScriptIsDeterministic) {
  EXPECT_EQ(random_script(500, 10, 30, 30, 4), random_script(500, 10, 30, 30, 4));
  EXPECT_NE(random_script(500, 10, 30, 30, 4), random_script(500, 10, 30, 30, 5));
}

TEST(Structure, FreshListPasses) {
  OrderedList<Variant::doubly_cursor> list;
  EXPECT_TRUE(check_structure(list).empty());
}

TEST(Structure, PassesAfterLongScriptAndMatchesOracle) {
  OrderedList<Variant::doubly> list;
  auto ctx = list.make_context();
  SetOracle oracle;
  for (const auto& s : random_script(10000, 300, 40, 30, 21)) {
    oracle.apply(s.op, s.key);
    switch (s.op) {
      case OpKind::add: list.add(s.key, ctx); break;
      case OpKind::rem: list.rem(s.key, ctx); break;
      case OpKind::con: list.con(s.key, ctx); break;
    }
  }
  EXPECT_TRUE(check_structure(list).empty());
  EXPECT_EQ(list.snapshot(),
            std::vector<Key>(oracle.contents().begin(), oracle.contents().end()));
}

TEST(Structure, ReportsOutOfOrderKeys) {
  OrderedList<Variant::singly> list;
  auto ctx = list.make_context();
  list.add(5, ctx);
  list.debug_splice_front(100);
  const auto v = check_structure(list);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().kind, Violation::Kind::order);
}

TEST(Structure, SweepRemovesLeftoverMarkedNodes) {
  OrderedList<Variant::singly_cursor> list;
  auto ctx = list.make_context();
  for (Key k = 1; k <= 5; ++k) list.add(k, ctx);
  list.debug_mark(2);
  list.debug_mark(4);
  EXPECT_TRUE(check_structure(list).empty());
  EXPECT_EQ(list.snapshot(), (std::vector<Key>{1, 3, 5}));
  std::size_t linked = 0;
  for (auto* n = list.head()->next.load().ref(); n != list.tail(); n = n->next.load().ref()) {
    ++linked;
  }
  EXPECT_EQ(linked, 3u);
}

TEST(Linearizability, SingleThreadHistoryIsItsOwnWitness) {
  std::vector<HistoryEvent> h;
  SetOracle oracle;
  std::uint64_t s = 0;
  for (const auto& op : random_script(20, 4, 40, 30, 8)) {
    h.push_back(inv(0, op.op, op.key, s++));
    h.push_back(res(0, op.op, op.key, oracle.apply(op.op, op.key), s++));
  }
  EXPECT_TRUE(check_linearizable(h));
}

TEST(Linearizability, OverlappingAddAndRemove) {
  const std::vector<HistoryEvent> h{
      inv(1, OpKind::add, 1, 0),        inv(2, OpKind::rem, 1, 1),
      res(1, OpKind::add, 1, true, 2),  res(2, OpKind::rem, 1, true, 3),
      inv(1, OpKind::con, 1, 4),        res(1, OpKind::con, 1, false, 5),
  };
  EXPECT_TRUE(check_linearizable(h));
}

TEST(Linearizability, ContainsWithoutAddHasNoWitness) {
  const std::vector<HistoryEvent> h{inv(0, OpKind::con, 1, 0), res(0, OpKind::con, 1, true, 1)};
  EXPECT_FALSE(check_linearizable(h));
}

TEST(Linearizability, RealTimeOrderIsRespected) {
  // rem starts after add finished, so it must see the key.
  const std::vector<HistoryEvent> h{
      inv(0, OpKind::add, 2, 0),         res(0, OpKind::add, 2, true, 1),
      inv(1, OpKind::rem, 2, 2),         res(1, OpKind::rem, 2, false, 3),
  };
  EXPECT_FALSE(check_linearizable(h));
}

TEST(Linearizability, RejectsOversizedHistoryWithSizeError) {
  std::vector<HistoryEvent> h;
  for (std::uint64_t i = 0; i <= kMaxCheckedOps; ++i) {
    h.push_back(inv(0, OpKind::con, 1, 2 * i));
    h.push_back(res(0, OpKind::con, 1, false, 2 * i + 1));
  }
  EXPECT_THROW(check_linearizable(h), HistoryTooLarge);
}

TEST(Linearizability, RejectsMalformedHistory) {
  const std::vector<HistoryEvent> pending{inv(0, OpKind::add, 1, 0)};
  EXPECT_THROW(check_linearizable(pending), std::invalid_argument);
  const std::vector<HistoryEvent> orphan{res(0, OpKind::add, 1, true, 0)};
  EXPECT_THROW(check_linearizable(orphan), std::invalid_argument);
  const std::vector<HistoryEvent> mismatch{inv(0, OpKind::add, 1, 0),
                                           res(0, OpKind::rem, 1, true, 1)};
  EXPECT_THROW(check_linearizable(mismatch), std::invalid_argument);
}

/// Brute force over every permutation, kept separate from the memoized
/// search it cross-checks.
bool brute_force_linearizable(const std::vector<CompletedOp>& ops) {
  std::vector<std::size_t> order(ops.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < order.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < order.size() && ok; ++b) {
        if (ops[order[b]].respond < ops[order[a]].invoke) ok = false;
      }
    }
    SetOracle oracle;
    for (std::size_t i = 0; i < order.size() && ok; ++i) {
      const auto& op = ops[order[i]];
      if (oracle.apply(op.op, op.key) != op.result) ok = false;
    }
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

TEST(Linearizability, AgreesWithBruteForceOnRandomHistories) {
  Xoshiro256 rng(2024);
  int accepted = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const unsigned threads = 1 + static_cast<unsigned>(rng.below(3));
    std::vector<HistoryEvent> h;
    std::vector<std::uint64_t> stamps;
    // Random interleaving of per-thread invoke/respond pairs.
    std::vector<unsigned> remaining(threads, 2);
    std::vector<bool> open(threads, false);
    std::vector<ScriptOp> current(threads);
    std::uint64_t stamp = 0;
    for (;;) {
      std::vector<unsigned> live;
      for (unsigned t = 0; t < threads; ++t) {
        if (remaining[t] > 0 || open[t]) live.push_back(t);
      }
      if (live.empty()) break;
      const unsigned t = live[rng.below(live.size())];
      if (!open[t]) {
        current[t] = {static_cast<OpKind>(rng.below(3)), 1 + static_cast<Key>(rng.below(2))};
        h.push_back(inv(t, current[t].op, current[t].key, stamp++));
        open[t] = true;
        --remaining[t];
      } else {
        h.push_back(res(t, current[t].op, current[t].key, rng.below(2) == 1, stamp++));
        open[t] = false;
      }
    }
    const auto ops = pair_events(h);
    const bool want = brute_force_linearizable(ops);
    ASSERT_EQ(check_linearizable(h), want) << "trial " << trial;
    accepted += want ? 1 : 0;
  }
  EXPECT_GT(accepted, 0);
  EXPECT_LT(accepted, 400);
}

TEST(HistoryFormat, RoundTripsRandomHistories) {
  Xoshiro256 rng(5);
  std::vector<HistoryEvent> h;
  for (std::uint64_t s = 0; s < 200; s += 2) {
    const unsigned t = static_cast<unsigned>(rng.below(4));
    const auto op = static_cast<OpKind>(rng.below(3));
    const Key k = static_cast<Key>(rng.below(1000)) - 500;
    h.push_back(inv(t, op, k, s));
    h.push_back(res(t, op, k, rng.below(2) == 1, s + 1));
  }
  std::stringstream buf;
  write_history(buf, h);
  EXPECT_EQ(read_history(buf), h);
}

TEST(HistoryFormat, LineLayout) {
  std::stringstream buf;
  const std::vector<HistoryEvent> h{inv(2, OpKind::rem, 7, 10), res(2, OpKind::rem, 7, true, 11)};
  write_history(buf, h);
  EXPECT_EQ(buf.str(), "2 rem 7 invoke - 10\n2 rem 7 respond 1 11\n");
}

TEST(HistoryFormat, RejectsGarbage) {
  std::stringstream bad("0 add 1 invoke - 0\n0 del 1 respond 1 1\n");
  EXPECT_THROW(read_history(bad), std::invalid_argument);
  std::stringstream short_line("0 add 1\n");
  EXPECT_THROW(read_history(short_line), std::invalid_argument);
  std::stringstream comment("# header\n\n0 con 3 invoke - 0\n0 con 3 respond 0 1\n");
  EXPECT_EQ(read_history(comment).size(), 2u);
}

TEST(Alternation, AcceptsOverlappingAddAndRemove) {
  const std::vector<HistoryEvent> h{
      inv(0, OpKind::add, 7, 0),        inv(1, OpKind::rem, 7, 1),
      res(1, OpKind::rem, 7, true, 2),  res(0, OpKind::add, 7, true, 3),
  };
  EXPECT_TRUE(check_alternation(h).empty());
}

TEST(Alternation, FlagsTwoAddsInARow) {
  const std::vector<HistoryEvent> h{
      inv(0, OpKind::add, 7, 0),        res(0, OpKind::add, 7, true, 1),
      inv(1, OpKind::add, 7, 2),        res(1, OpKind::add, 7, true, 3),
  };
  EXPECT_FALSE(check_alternation(h).empty());
}

TEST(Alternation, FlagsRemoveBeforeAnyAdd) {
  const std::vector<HistoryEvent> h{
      inv(0, OpKind::rem, 3, 0), res(0, OpKind::rem, 3, true, 1),
      inv(0, OpKind::add, 3, 2), res(0, OpKind::add, 3, true, 3),
  };
  EXPECT_FALSE(check_alternation(h).empty());
}

}  // namespace
}  // namespace lfol
