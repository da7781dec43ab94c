#include "lfol/oracle.hpp"

#include "lfol/rng.hpp"

namespace lfol {

std::string_view op_name(OpKind op) {
  switch (op) {
    case OpKind::add: return "add";
    case OpKind::rem: return "rem";
    case OpKind::con: return "con";
  }
  return "?";
}

bool SetOracle::apply(OpKind op, Key key) {
  switch (op) {
    case OpKind::add: return keys_.insert(key).second;
    case OpKind::rem: return keys_.erase(key) == 1;
    case OpKind::con: return keys_.contains(key);
  }
  return false;
}

std::vector<bool> oracle_replay(std::span<const ScriptOp> script) {
  SetOracle oracle;
  std::vector<bool> results;
  results.reserve(script.size());
  for (const ScriptOp& s : script) results.push_back(oracle.apply(s.op, s.key));
  return results;
}

std::vector<ScriptOp> random_script(std::size_t length, Key keyrange, unsigned add_pct,
                                    unsigned rem_pct, std::uint64_t seed) {
  Xoshiro256 rng(seed);
  std::vector<ScriptOp> script;
  script.reserve(length);
  for (std::size_t i = 0; i < length; ++i) {
    const std::uint64_t r = rng.below(100);
    const OpKind op = r < add_pct ? OpKind::add : r < add_pct + rem_pct ? OpKind::rem : OpKind::con;
    const Key key = 1 + static_cast<Key>(rng.below(static_cast<std::uint64_t>(keyrange)));
    script.push_back({op, key});
  }
  return script;
}

}  // namespace lfol
