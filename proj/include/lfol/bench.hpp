#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lfol/counters.hpp"
#include "lfol/variant.hpp"

namespace lfol {

enum class Benchmark { det_shared, det_disjoint, random_mix };

std::string_view benchmark_name(Benchmark b);  // det-shared, det-disjoint, random
std::optional<Benchmark> parse_benchmark(std::string_view text);

struct OpMix {
  unsigned add = 25;
  unsigned rem = 25;
  unsigned con = 50;

  std::string to_string() const;  // "25:25:50"
  static std::optional<OpMix> parse(std::string_view text);
  friend bool operator==(const OpMix&, const OpMix&) = default;
};

struct BenchConfig {
  Variant variant = Variant::draconic;
  Benchmark benchmark = Benchmark::random_mix;
  unsigned threads = 1;          // p
  std::uint64_t n = 10000;       // per-phase length, deterministic benchmarks
  std::uint64_t ops = 50000;     // c, operations per thread, random mix
  std::uint64_t prefill = 16384; // f
  std::uint64_t keyrange = 32768;  // U, keys drawn from [0, U-1]
  OpMix mix;
  std::uint64_t seed = 1;
  unsigned repeats = 1;
  bool pin = false;
};

/// Throws std::invalid_argument when the configuration is unusable.
void validate(const BenchConfig& cfg);

/// 9*p*n for the deterministic benchmarks, p*c for the random mix.
std::uint64_t expected_total_ops(const BenchConfig& cfg);

struct BenchReport {
  double time_ms = 0;
  std::uint64_t total_ops = 0;
  double throughput_kops = 0;
  Counters counters;
  std::size_t final_size = 0;  // keys left in the list after the run
  bool pinned = false;         // workers were bound to CPUs
};

/// Each thread runs, without barriers between phases:
///   for i = 0..n-1:   con, add, con, add   of k(i)
///   for i = n-1..0:   con, rem, con, rem   of k(i)
///   for i = 0..n-1:   con                  of k(i)
/// with k(i) = i (det_shared) or k(i) = t + i*p (det_disjoint).
BenchReport run_deterministic(const BenchConfig& cfg);

/// Prefills f distinct uniform keys single-threaded (untimed, uncounted),
/// then every thread performs c operations drawn from the mix with uniform
/// keys in [0, U-1], seeded with seed ^ thread-id.
BenchReport run_random(const BenchConfig& cfg);

BenchReport run_benchmark(const BenchConfig& cfg);

/// Whether this platform lets the harness bind threads to CPUs.
bool affinity_supported();

}  // namespace lfol
