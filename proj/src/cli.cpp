#include "lfol/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lfol/link_word.hpp"
#include "lfol/linearizability.hpp"
#include "lfol/stress.hpp"

namespace lfol {

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::uint64_t mean_of(const std::vector<BenchReport>& runs, std::uint64_t Counters::*field) {
  double sum = 0;
  for (const auto& r : runs) sum += static_cast<double>(r.counters.*field);
  return static_cast<std::uint64_t>(std::llround(sum / static_cast<double>(runs.size())));
}

int replay(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "cannot open history file " << path << '\n';
    return kExitUsage;
  }
  try {
    const auto history = read_history(in);
    const bool ok = check_linearizable(history);
    out << (ok ? "linearizable" : "not linearizable") << '\n';
    return ok ? 0 : kExitViolation;
  } catch (const std::exception& e) {
    err << "replay: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace

std::string csv_row(const BenchConfig& cfg, int repeat, const BenchReport& r) {
  const bool random = cfg.benchmark == Benchmark::random_mix;
  std::ostringstream row;
  row << variant_name(cfg.variant) << ',' << benchmark_name(cfg.benchmark) << ',' << cfg.threads
      << ',' << (random ? 0 : cfg.n) << ',' << (random ? cfg.ops : 0) << ','
      << (random ? cfg.prefill : 0) << ',' << (random ? cfg.keyrange : 0) << ','
      << (random ? cfg.mix.to_string() : "-") << ',' << cfg.seed << ',' << repeat << ','
      << fixed(r.time_ms) << ',' << r.total_ops << ',' << fixed(r.throughput_kops) << ','
      << r.counters.adds << ',' << r.counters.rems << ',' << r.counters.cons << ','
      << r.counters.trav << ',' << r.counters.fail << ',' << r.counters.rtry;
  return row.str();
}

BenchReport mean_report(const std::vector<BenchReport>& runs) {
  BenchReport m;
  if (runs.empty()) return m;
  const double k = static_cast<double>(runs.size());
  for (const auto& r : runs) {
    m.time_ms += r.time_ms / k;
    m.throughput_kops += r.throughput_kops / k;
  }
  m.total_ops = runs.front().total_ops;
  m.counters.adds = mean_of(runs, &Counters::adds);
  m.counters.rems = mean_of(runs, &Counters::rems);
  m.counters.cons = mean_of(runs, &Counters::cons);
  m.counters.trav = mean_of(runs, &Counters::trav);
  m.counters.fail = mean_of(runs, &Counters::fail);
  m.counters.rtry = mean_of(runs, &Counters::rtry);
  m.final_size = runs.front().final_size;
  m.pinned = runs.front().pinned;
  return m;
}

std::vector<std::string> check_report(const BenchConfig& cfg, const BenchReport& r) {
  std::vector<std::string> problems;
  const std::uint64_t want = expected_total_ops(cfg);
  if (r.total_ops != want) {
    problems.push_back("total_ops " + std::to_string(r.total_ops) + " != expected " +
                       std::to_string(want));
  }
  const Counters& c = r.counters;
  if (cfg.benchmark == Benchmark::random_mix) {
    if (c.adds + cfg.prefill != c.rems + r.final_size) {
      problems.push_back("adds - rems does not match the change in list size");
    }
    return problems;
  }
  if (c.adds != c.rems) problems.push_back("adds != rems in a deterministic run");
  if (r.final_size != 0) problems.push_back("deterministic run left keys in the list");
  if (cfg.benchmark == Benchmark::det_disjoint && c.adds != cfg.threads * cfg.n) {
    problems.push_back("disjoint run: adds " + std::to_string(c.adds) + " != p*n " +
                       std::to_string(cfg.threads * cfg.n));
  }
  return problems;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Benchmark and verification driver for the lock-free ordered list variants"};

  std::string variant_arg = "draconic";
  std::string bench_arg = "random";
  std::string threads_arg = "1";
  std::string mix_arg = "25:25:50";
  std::string pin_arg = "off";
  std::string out_path;
  std::string replay_path;
  std::string history_out;
  BenchConfig base;
  bool list_variants = false;
  bool build_info = false;
  bool stress_mode = false;

  app.add_option("--variant", variant_arg, "variant name or letter, comma list allowed");
  app.add_option("--bench", bench_arg, "det-shared | det-disjoint | random");
  app.add_option("--threads", threads_arg, "thread count or comma list (sweep)");
  app.add_option("--n", base.n, "per-phase length of the deterministic benchmarks");
  app.add_option("--ops", base.ops, "operations per thread (random mix, stress)");
  app.add_option("--prefill", base.prefill, "prefilled distinct keys (random mix)");
  app.add_option("--keyrange", base.keyrange, "keys drawn from [0, keyrange-1]");
  app.add_option("--mix", mix_arg, "add:rem:con percentages");
  app.add_option("--seed", base.seed, "base seed; LFOL_SEED overrides");
  app.add_option("--repeats", base.repeats, "runs per configuration (stress: seeds)");
  app.add_option("--out", out_path, "write CSV here instead of stdout");
  app.add_option("--pin", pin_arg, "bind threads to CPUs")->check(CLI::IsMember({"on", "off"}));
  app.add_flag("--list-variants", list_variants, "print the six variants and exit");
  app.add_flag("--build-info", build_info, "print platform and schema details and exit");
  app.add_option("--replay", replay_path, "check a recorded history file for linearizability");
  app.add_flag("--stress", stress_mode, "run seeded stress checks instead of benchmarks");
  app.add_option("--history-out", history_out, "stress: write the first failing history here");

  std::vector<const char*> argv{"lfol-bench"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (list_variants) {
    for (Variant v : kAllVariants) out << variant_letter(v) << ") " << variant_name(v) << '\n';
    return 0;
  }
  if (build_info) {
    out << "csv_schema_version " << kCsvSchemaVersion << '\n'
        << "fetch_or " << fetch_or_lowering_name(fetch_or_lowering()) << '\n'
        << "affinity " << (affinity_supported() ? "supported" : "unsupported") << '\n'
        << "hardware_threads " << std::thread::hardware_concurrency() << '\n';
    return 0;
  }
  if (!replay_path.empty()) return replay(replay_path, out, err);

  if (const char* env = std::getenv("LFOL_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long long s = std::strtoull(env, &end, 10);
    if (*end != '\0') {
      err << "LFOL_SEED is not an unsigned integer: " << env << '\n';
      return kExitUsage;
    }
    base.seed = s;
  }

  std::vector<Variant> variants;
  for (const auto& name : split_commas(variant_arg)) {
    auto v = parse_variant(name);
    if (!v) {
      err << "unknown variant '" << name << "' (see --list-variants)\n";
      return kExitUsage;
    }
    variants.push_back(*v);
  }
  std::vector<unsigned> thread_counts;
  for (const auto& t : split_commas(threads_arg)) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(t, &used);
      if (used != t.size() || v == 0) throw std::invalid_argument(t);
      thread_counts.push_back(static_cast<unsigned>(v));
    } catch (const std::exception&) {
      err << "bad thread count '" << t << "'\n";
      return kExitUsage;
    }
  }
  auto bench = parse_benchmark(bench_arg);
  auto mix = OpMix::parse(mix_arg);
  if (!bench || !mix || variants.empty() || thread_counts.empty()) {
    err << "bad --bench, --mix, --variant or --threads value\n";
    return kExitUsage;
  }
  base.benchmark = *bench;
  base.mix = *mix;
  base.pin = pin_arg == "on";

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "cannot open " << out_path << '\n';
      return kExitUsage;
    }
  }
  std::ostream& sink = out_path.empty() ? out : file;

  if (stress_mode) {
    int status = 0;
    sink << "variant,threads,ops,keyrange,seeds,failures\n";
    for (Variant v : variants) {
      for (unsigned p : thread_counts) {
        unsigned failures = 0;
        for (unsigned i = 0; i < base.repeats; ++i) {
          StressConfig sc;
          sc.variant = v;
          sc.threads = p;
          sc.ops_per_thread = base.ops;
          sc.keyrange = static_cast<Key>(base.keyrange);
          sc.seed = base.seed + i;
          sc.add_pct = base.mix.add;
          sc.rem_pct = base.mix.rem;
          sc.record_history = p * base.ops <= kMaxCheckedOps;
          sc.check_linearizability = sc.record_history;
          StressResult res;
          try {
            res = stress(sc);
          } catch (const std::exception& e) {
            err << "stress: " << e.what() << '\n';
            return kExitUsage;
          }
          if (res.ok()) continue;
          ++failures;
          err << variant_name(v) << " seed " << sc.seed << " failed:\n" << res.describe();
          if (!history_out.empty() && failures == 1) {
            std::ofstream h(history_out);
            write_history(h, res.history);
          }
        }
        sink << variant_name(v) << ',' << p << ',' << base.ops << ',' << base.keyrange << ','
             << base.repeats << ',' << failures << '\n';
        if (failures != 0) status = kExitViolation;
      }
    }
    return status;
  }

  sink << kCsvHeader << '\n';
  int status = 0;
  for (Variant v : variants) {
    for (unsigned p : thread_counts) {
      BenchConfig cfg = base;
      cfg.variant = v;
      cfg.threads = p;
      try {
        validate(cfg);
      } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitUsage;
      }
      std::vector<BenchReport> runs;
      for (unsigned rep = 0; rep < cfg.repeats; ++rep) {
        BenchReport r = run_benchmark(cfg);
        sink << csv_row(cfg, static_cast<int>(rep), r) << '\n';
        for (const auto& problem : check_report(cfg, r)) {
          err << variant_name(v) << " p=" << p << " repeat " << rep << ": " << problem << '\n';
          status = kExitViolation;
        }
        runs.push_back(r);
      }
      sink << csv_row(cfg, -1, mean_report(runs)) << '\n';
      sink.flush();
    }
  }
  return status;
}

}  // namespace lfol
