#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "lfol/node.hpp"

namespace lfol {

enum class OpKind : std::uint8_t { add, rem, con };

std::string_view op_name(OpKind op);

struct ScriptOp {
  OpKind op;
  Key key;
  friend bool operator==(const ScriptOp&, const ScriptOp&) = default;
};

/// Reference sequential set: add is true iff absent, rem true iff present,
/// con reports membership.
class SetOracle {
 public:
  bool apply(OpKind op, Key key);
  const std::set<Key>& contents() const { return keys_; }

 private:
  std::set<Key> keys_;
};

std::vector<bool> oracle_replay(std::span<const ScriptOp> script);

/// Deterministic random script over keys [1, keyrange] with the given
/// add/rem percentages (the rest are con).
std::vector<ScriptOp> random_script(std::size_t length, Key keyrange, unsigned add_pct,
                                    unsigned rem_pct, std::uint64_t seed);

}  // namespace lfol
