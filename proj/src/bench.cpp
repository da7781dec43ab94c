#include "lfol/bench.hpp"

#include <barrier>
#include <charconv>
#include <chrono>
#include <stdexcept>
#include <thread>
#include <vector>

#if defined(__linux__)
#include <pthread.h>
#include <sched.h>
#endif

#include "lfol/ordered_list.hpp"

namespace lfol {

std::string_view benchmark_name(Benchmark b) {
  switch (b) {
    case Benchmark::det_shared: return "det-shared";
    case Benchmark::det_disjoint: return "det-disjoint";
    case Benchmark::random_mix: return "random";
  }
  return "unknown";
}

std::optional<Benchmark> parse_benchmark(std::string_view text) {
  for (Benchmark b : {Benchmark::det_shared, Benchmark::det_disjoint, Benchmark::random_mix}) {
    if (benchmark_name(b) == text) return b;
  }
  if (text == "det_shared") return Benchmark::det_shared;
  if (text == "det_disjoint") return Benchmark::det_disjoint;
  if (text == "random_mix" || text == "random-mix") return Benchmark::random_mix;
  return std::nullopt;
}

std::string OpMix::to_string() const {
  return std::to_string(add) + ":" + std::to_string(rem) + ":" + std::to_string(con);
}

std::optional<OpMix> OpMix::parse(std::string_view text) {
  unsigned parts[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, parts[i]);
    if (ec != std::errc{}) return std::nullopt;
    p = next;
    if (i < 2) {
      if (p == end || *p != ':') return std::nullopt;
      ++p;
    }
  }
  if (p != end) return std::nullopt;
  return OpMix{parts[0], parts[1], parts[2]};
}

void validate(const BenchConfig& cfg) {
  if (cfg.threads < 1) throw std::invalid_argument("threads must be at least 1");
  if (cfg.repeats < 1) throw std::invalid_argument("repeats must be at least 1");
  if (cfg.benchmark == Benchmark::random_mix) {
    if (cfg.keyrange < 1) throw std::invalid_argument("keyrange must be positive");
    if (cfg.prefill > cfg.keyrange) {
      throw std::invalid_argument("prefill cannot exceed the key range");
    }
    if (cfg.mix.add + cfg.mix.rem + cfg.mix.con != 100) {
      throw std::invalid_argument("operation mix must sum to 100");
    }
  }
}

std::uint64_t expected_total_ops(const BenchConfig& cfg) {
  if (cfg.benchmark == Benchmark::random_mix) return cfg.threads * cfg.ops;
  return 9 * cfg.threads * cfg.n;
}

bool affinity_supported() {
#if defined(__linux__)
  return true;
#else
  return false;
#endif
}

namespace {

bool pin_current_thread(unsigned index) {
#if defined(__linux__)
  const unsigned cpus = std::max(1u, std::thread::hardware_concurrency());
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(index % cpus, &set);
  return pthread_setaffinity_np(pthread_self(), sizeof(set), &set) == 0;
#else
  (void)index;
  return false;
#endif
}

/// Starts p workers behind one barrier and times from its release to the
/// last join. Returns elapsed milliseconds.
template <class Body>
double run_timed(unsigned p, bool pin, bool& pinned, Body&& body) {
  std::barrier start(static_cast<std::ptrdiff_t>(p) + 1);
  std::vector<std::thread> workers;
  std::vector<char> pin_ok(p, 0);
  workers.reserve(p);
  for (unsigned t = 0; t < p; ++t) {
    workers.emplace_back([&, t] {
      if (pin) pin_ok[t] = pin_current_thread(t) ? 1 : 0;
      start.arrive_and_wait();
      body(t);
    });
  }
  start.arrive_and_wait();
  const auto t0 = std::chrono::steady_clock::now();
  for (auto& w : workers) w.join();
  const auto t1 = std::chrono::steady_clock::now();
  pinned = pin;
  for (char ok : pin_ok) pinned = pinned && ok;
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void finish(BenchReport& r, std::uint64_t total_ops) {
  r.total_ops = total_ops;
  r.throughput_kops = r.time_ms > 0 ? static_cast<double>(total_ops) / r.time_ms : 0.0;
}

template <Variant V>
BenchReport deterministic(const BenchConfig& cfg) {
  using List = OrderedList<V>;
  List list;
  const unsigned p = cfg.threads;
  const std::uint64_t n = cfg.n;
  const bool disjoint = cfg.benchmark == Benchmark::det_disjoint;
  std::vector<typename List::Context> contexts;
  for (unsigned t = 0; t < p; ++t) contexts.push_back(list.make_context(cfg.seed ^ t));
  std::vector<std::uint64_t> ops_done(p, 0);

  BenchReport r;
  r.time_ms = run_timed(p, cfg.pin, r.pinned, [&](unsigned t) {
    auto& ctx = contexts[t];
    auto k = [&](std::uint64_t i) -> Key {
      return static_cast<Key>(disjoint ? t + i * p : i);
    };
    std::uint64_t ops = 0;
    for (std::uint64_t i = 0; i < n; ++i) {
      const Key key = k(i);
      list.con(key, ctx);
      list.add(key, ctx);
      list.con(key, ctx);
      list.add(key, ctx);
      ops += 4;
    }
    for (std::uint64_t i = n; i-- > 0;) {
      const Key key = k(i);
      list.con(key, ctx);
      list.rem(key, ctx);
      list.con(key, ctx);
      list.rem(key, ctx);
      ops += 4;
    }
    for (std::uint64_t i = 0; i < n; ++i) {
      list.con(k(i), ctx);
      ++ops;
    }
    ops_done[t] = ops;
  });

  r.counters = aggregate_contexts(contexts);
  r.final_size = list.snapshot().size();
  std::uint64_t total = 0;
  for (auto o : ops_done) total += o;
  finish(r, total);
  return r;
}

template <Variant V>
BenchReport random_mix(const BenchConfig& cfg) {
  using List = OrderedList<V>;
  List list;
  const unsigned p = cfg.threads;
  const std::uint64_t range = cfg.keyrange;

  {
    auto filler = list.make_context(~cfg.seed);
    std::uint64_t inserted = 0;
    while (inserted < cfg.prefill) {
      if (list.add(static_cast<Key>(filler.rng.below(range)), filler)) ++inserted;
    }
  }

  std::vector<typename List::Context> contexts;
  for (unsigned t = 0; t < p; ++t) contexts.push_back(list.make_context(cfg.seed ^ t));
  std::vector<std::uint64_t> ops_done(p, 0);
  const unsigned add_cut = cfg.mix.add;
  const unsigned rem_cut = cfg.mix.add + cfg.mix.rem;

  BenchReport r;
  r.time_ms = run_timed(p, cfg.pin, r.pinned, [&](unsigned t) {
    auto& ctx = contexts[t];
    std::uint64_t ops = 0;
    for (std::uint64_t i = 0; i < cfg.ops; ++i) {
      const std::uint64_t pick = ctx.rng.below(100);
      const Key key = static_cast<Key>(ctx.rng.below(range));
      if (pick < add_cut) {
        list.add(key, ctx);
      } else if (pick < rem_cut) {
        list.rem(key, ctx);
      } else {
        list.con(key, ctx);
      }
      ++ops;
    }
    ops_done[t] = ops;
  });

  r.counters = aggregate_contexts(contexts);
  r.final_size = list.snapshot().size();
  std::uint64_t total = 0;
  for (auto o : ops_done) total += o;
  finish(r, total);
  return r;
}

}  // namespace

BenchReport run_deterministic(const BenchConfig& cfg) {
  validate(cfg);
  if (cfg.benchmark == Benchmark::random_mix) {
    throw std::invalid_argument("run_deterministic needs det-shared or det-disjoint");
  }
  return dispatch_variant(cfg.variant,
                          [&](auto tag) { return deterministic<decltype(tag)::value>(cfg); });
}

BenchReport run_random(const BenchConfig& cfg) {
  validate(cfg);
  if (cfg.benchmark != Benchmark::random_mix) {
    throw std::invalid_argument("run_random needs the random benchmark");
  }
  return dispatch_variant(cfg.variant,
                          [&](auto tag) { return random_mix<decltype(tag)::value>(cfg); });
}

BenchReport run_benchmark(const BenchConfig& cfg) {
  return cfg.benchmark == Benchmark::random_mix ? run_random(cfg) : run_deterministic(cfg);
}

}  // namespace lfol
