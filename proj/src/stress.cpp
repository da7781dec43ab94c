#include "lfol/stress.hpp"

#include <barrier>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "lfol/chaos.hpp"
#include "lfol/linearizability.hpp"
#include "lfol/ordered_list.hpp"
#include "lfol/rng.hpp"

namespace lfol {

namespace {

using ChaosPoints = YieldingSchedulePoints;

OpKind draw_op(Xoshiro256& rng, const StressConfig& cfg) {
  const std::uint64_t r = rng.below(100);
  if (r < cfg.add_pct) return OpKind::add;
  if (r < cfg.add_pct + cfg.rem_pct) return OpKind::rem;
  return OpKind::con;
}

template <Variant V>
StressResult run_stress(const StressConfig& cfg) {
  using List = OrderedList<V, ChaosPoints>;
  List list;
  const std::uint64_t base = SplitMix64(cfg.seed)();
  std::vector<typename List::Context> contexts;
  for (unsigned t = 0; t < cfg.threads; ++t) contexts.push_back(list.make_context(base ^ t));

  HistoryRecorder recorder(cfg.threads);
  std::barrier start(static_cast<std::ptrdiff_t>(cfg.threads));
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < cfg.threads; ++t) {
    workers.emplace_back([&, t] {
      auto& ctx = contexts[t];
      ChaosPoints::configure(base + 0x51ed27 * (t + 1), cfg.chaos_one_in);
      start.arrive_and_wait();
      for (std::uint64_t i = 0; i < cfg.ops_per_thread; ++i) {
        const OpKind op = draw_op(ctx.rng, cfg);
        const Key key = 1 + static_cast<Key>(ctx.rng.below(static_cast<std::uint64_t>(cfg.keyrange)));
        if (cfg.record_history) recorder.invoke(t, op, key);
        bool result = false;
        switch (op) {
          case OpKind::add: result = list.add(key, ctx); break;
          case OpKind::rem: result = list.rem(key, ctx); break;
          case OpKind::con: result = list.con(key, ctx); break;
        }
        if (cfg.record_history) recorder.respond(t, op, key, result);
        if (cfg.chaos_one_in != 0) ChaosPoints::point();
      }
      ChaosPoints::configure(0, 0);
    });
  }
  for (auto& w : workers) w.join();

  StressResult res;
  res.counters = aggregate_contexts(contexts);
  res.structure = check_structure(list);
  res.final_keys = list.snapshot();

  const std::uint64_t net = res.counters.adds - res.counters.rems;
  if (net != res.final_keys.size()) {
    res.membership.push_back("adds - rems = " + std::to_string(net) + " but " +
                             std::to_string(res.final_keys.size()) + " keys remain");
  }

  if (cfg.record_history) {
    res.history = recorder.merge();
    res.alternation = check_alternation(res.history);

    std::map<Key, long> balance;
    for (const CompletedOp& op : pair_events(res.history)) {
      if (!op.result) continue;
      if (op.op == OpKind::add) ++balance[op.key];
      if (op.op == OpKind::rem) --balance[op.key];
    }
    std::map<Key, long> present;
    for (Key k : res.final_keys) present[k] = 1;
    for (const auto& [key, b] : balance) {
      const long want = present.contains(key) ? 1 : 0;
      if (b != want) {
        res.membership.push_back("key " + std::to_string(key) + ": success balance " +
                                 std::to_string(b) + ", present " + std::to_string(want));
      }
    }
    for (const auto& [key, one] : present) {
      if (!balance.contains(key)) {
        res.membership.push_back("key " + std::to_string(key) + " present but never added");
      }
    }

    if (cfg.check_linearizability) res.linearizable = check_linearizable(res.history);
  }
  return res;
}

}  // namespace

bool StressResult::ok() const {
  return structure.empty() && alternation.empty() && membership.empty() &&
         linearizable.value_or(true);
}

std::string StressResult::describe() const {
  std::ostringstream out;
  for (const auto& v : structure) out << violation_kind_name(v.kind) << ": " << v.detail << '\n';
  for (const auto& a : alternation) out << "alternation: " << a << '\n';
  for (const auto& m : membership) out << "membership: " << m << '\n';
  if (linearizable.has_value() && !*linearizable) {
    out << "not linearizable; history follows\n";
    write_history(out, history);
  }
  return out.str();
}

StressResult stress(const StressConfig& cfg) {
  if (cfg.threads == 0) throw std::invalid_argument("stress needs at least one thread");
  if (cfg.keyrange < 1) throw std::invalid_argument("keyrange must be positive");
  if (cfg.add_pct + cfg.rem_pct > 100) throw std::invalid_argument("op mix exceeds 100%");
  if (cfg.check_linearizability && !cfg.record_history) {
    throw std::invalid_argument("linearizability checking needs a recorded history");
  }
  return dispatch_variant(cfg.variant,
                          [&](auto tag) { return run_stress<decltype(tag)::value>(cfg); });
}

}  // namespace lfol
