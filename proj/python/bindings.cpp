#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>
#include <string>
#include <tuple>

#include "lfol/bench.hpp"
#include "lfol/cli.hpp"
#include "lfol/linearizability.hpp"
#include "lfol/oracle.hpp"
#include "lfol/ordered_set.hpp"
#include "lfol/stress.hpp"

namespace py = pybind11;

namespace {

lfol::Variant to_variant(const std::string& name) {
  auto v = lfol::parse_variant(name);
  if (!v) throw py::value_error("unknown variant '" + name + "'");
  return *v;
}

lfol::OpKind to_op(const std::string& name) {
  if (name == "add") return lfol::OpKind::add;
  if (name == "rem") return lfol::OpKind::rem;
  if (name == "con") return lfol::OpKind::con;
  throw py::value_error("unknown op '" + name + "'");
}

py::dict counters_dict(const lfol::Counters& c) {
  py::dict d;
  d["adds"] = c.adds;
  d["rems"] = c.rems;
  d["cons"] = c.cons;
  d["trav"] = c.trav;
  d["fail"] = c.fail;
  d["rtry"] = c.rtry;
  return d;
}

}  // namespace

PYBIND11_MODULE(_lfol, m) {
  m.doc() = "Lock-free ordered list variants with benchmark and verification harness";

  m.def("variants", [] {
    std::vector<std::string> names;
    for (auto v : lfol::kAllVariants) names.emplace_back(lfol::variant_name(v));
    return names;
  });
  m.def("fetch_or_lowering",
        [] { return std::string(lfol::fetch_or_lowering_name(lfol::fetch_or_lowering())); });
  m.attr("KEY_MIN") = lfol::kKeyMin;
  m.attr("KEY_MAX") = lfol::kKeyMax;
  m.attr("CSV_HEADER") = lfol::kCsvHeader;

  py::register_exception<lfol::HistoryTooLarge>(m, "HistoryTooLarge", PyExc_ValueError);

  py::class_<lfol::OrderedSet::Context>(m, "Context")
      .def_property_readonly("counters", [](const lfol::OrderedSet::Context& c) {
        return counters_dict(c.counters());
      });

  py::class_<lfol::OrderedSet>(m, "OrderedSet")
      .def(py::init([](const std::string& variant) { return lfol::OrderedSet(to_variant(variant)); }),
           py::arg("variant"))
      .def_property_readonly("variant",
                             [](const lfol::OrderedSet& s) {
                               return std::string(lfol::variant_name(s.variant()));
                             })
      .def("make_context", &lfol::OrderedSet::make_context, py::arg("seed") = 0,
           py::keep_alive<0, 1>())
      .def("add", &lfol::OrderedSet::add, py::arg("key"), py::arg("ctx"))
      .def("rem", &lfol::OrderedSet::rem, py::arg("key"), py::arg("ctx"))
      .def("con", &lfol::OrderedSet::con, py::arg("key"), py::arg("ctx"))
      .def("snapshot", &lfol::OrderedSet::snapshot)
      .def("allocated", &lfol::OrderedSet::allocated)
      .def("check_structure", [](lfol::OrderedSet& s) {
        std::vector<std::tuple<std::string, std::string>> out;
        for (const auto& v : s.check_structure()) {
          out.emplace_back(lfol::violation_kind_name(v.kind), v.detail);
        }
        return out;
      });

  m.def(
      "run_benchmark",
      [](const std::string& variant, const std::string& bench, unsigned threads, std::uint64_t n,
         std::uint64_t ops, std::uint64_t prefill, std::uint64_t keyrange, const std::string& mix,
         std::uint64_t seed, bool pin) {
        lfol::BenchConfig cfg;
        cfg.variant = to_variant(variant);
        auto b = lfol::parse_benchmark(bench);
        auto mx = lfol::OpMix::parse(mix);
        if (!b) throw py::value_error("unknown benchmark '" + bench + "'");
        if (!mx) throw py::value_error("bad mix '" + mix + "'");
        cfg.benchmark = *b;
        cfg.mix = *mx;
        cfg.threads = threads;
        cfg.n = n;
        cfg.ops = ops;
        cfg.prefill = prefill;
        cfg.keyrange = keyrange;
        cfg.seed = seed;
        cfg.pin = pin;
        lfol::BenchReport r;
        {
          py::gil_scoped_release release;
          r = lfol::run_benchmark(cfg);
        }
        py::dict d = counters_dict(r.counters);
        d["time_ms"] = r.time_ms;
        d["total_ops"] = r.total_ops;
        d["throughput_kops"] = r.throughput_kops;
        d["final_size"] = r.final_size;
        d["csv_row"] = lfol::csv_row(cfg, 0, r);
        return d;
      },
      py::arg("variant"), py::arg("bench") = "random", py::arg("threads") = 1,
      py::arg("n") = 1000, py::arg("ops") = 50000, py::arg("prefill") = 16384,
      py::arg("keyrange") = 32768, py::arg("mix") = "25:25:50", py::arg("seed") = 1,
      py::arg("pin") = false);

  m.def("oracle_replay", [](const std::vector<std::tuple<std::string, lfol::Key>>& script) {
    std::vector<lfol::ScriptOp> ops;
    for (const auto& [op, key] : script) ops.push_back({to_op(op), key});
    return lfol::oracle_replay(ops);
  });

  m.def(
      "check_linearizable",
      [](const std::vector<std::tuple<unsigned, std::string, lfol::Key, std::string, bool,
                                      std::uint64_t>>& events) {
        std::vector<lfol::HistoryEvent> history;
        for (const auto& [thread, op, key, phase, result, stamp] : events) {
          if (phase != "invoke" && phase != "respond") throw py::value_error("bad phase");
          history.push_back({thread, to_op(op), key,
                             phase == "invoke" ? lfol::Phase::invoke : lfol::Phase::respond, result,
                             stamp});
        }
        try {
          return lfol::check_linearizable(history);
        } catch (const std::invalid_argument& e) {
          throw py::value_error(e.what());
        }
      },
      "events are (thread, op, key, 'invoke'|'respond', result, stamp) tuples");

  m.def(
      "stress",
      [](const std::string& variant, unsigned threads, std::uint64_t ops, lfol::Key keyrange,
         std::uint64_t seed) {
        lfol::StressConfig cfg;
        cfg.variant = to_variant(variant);
        cfg.threads = threads;
        cfg.ops_per_thread = ops;
        cfg.keyrange = keyrange;
        cfg.seed = seed;
        cfg.record_history = threads * ops <= lfol::kMaxCheckedOps;
        cfg.check_linearizability = cfg.record_history;
        lfol::StressResult r;
        {
          py::gil_scoped_release release;
          r = lfol::stress(cfg);
        }
        py::dict d = counters_dict(r.counters);
        d["ok"] = r.ok();
        d["report"] = r.describe();
        d["final_keys"] = r.final_keys;
        d["linearizable"] = r.linearizable;
        return d;
      },
      py::arg("variant"), py::arg("threads") = 4, py::arg("ops") = 8, py::arg("keyrange") = 4,
      py::arg("seed") = 1);
}
