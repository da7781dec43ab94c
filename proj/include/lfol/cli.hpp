#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lfol/bench.hpp"

namespace lfol {

inline constexpr int kCsvSchemaVersion = 1;

/// Column order of every CSV row the harness writes.
inline constexpr const char* kCsvHeader =
    "variant,benchmark,threads,n,c,prefill,keyrange,mix,seed,repeat,time_ms,total_ops,"
    "throughput_kops,adds,rems,cons,trav,fail,rtry";

/// `repeat` is the run index, or -1 for the mean row of a configuration.
std::string csv_row(const BenchConfig& cfg, int repeat, const BenchReport& report);

/// Arithmetic mean of time, throughput and counters (counters rounded).
BenchReport mean_report(const std::vector<BenchReport>& runs);

/// Post-run sanity checks. Returns a description of each violation.
std::vector<std::string> check_report(const BenchConfig& cfg, const BenchReport& report);

/// Entry point of the benchmark tool. `args` excludes the program name.
/// Exit status: 0 success, 1 invariant violation or failed check,
/// 2 bad flags or unusable input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfol
