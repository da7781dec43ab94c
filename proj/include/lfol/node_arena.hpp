#pragma once

#include <cstddef>
#include <memory>
#include <vector>

namespace lfol {

/// Single-owner bump allocator for list nodes. Nodes are never freed
/// individually; the whole arena goes away with the list that owns it.
template <class NodeT>
class NodeArena {
 public:
  static constexpr std::size_t kChunkNodes = 1024;

  NodeArena() = default;
  NodeArena(const NodeArena&) = delete;
  NodeArena& operator=(const NodeArena&) = delete;

  NodeT* allocate() {
    if (used_in_last_ == kChunkNodes) {
      chunks_.push_back(std::make_unique<NodeT[]>(kChunkNodes));
      used_in_last_ = 0;
    }
    ++count_;
    return &chunks_.back()[used_in_last_++];
  }

  std::size_t size() const { return count_; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t c = 0; c < chunks_.size(); ++c) {
      const std::size_t used = (c + 1 == chunks_.size()) ? used_in_last_ : kChunkNodes;
      for (std::size_t i = 0; i < used; ++i) fn(&chunks_[c][i]);
    }
  }

  /// Intrusive link in the owning list's registry of arenas.
  NodeArena* next_registered = nullptr;

 private:
  std::vector<std::unique_ptr<NodeT[]>> chunks_;
  std::size_t used_in_last_ = kChunkNodes;
  std::size_t count_ = 0;
};

}  // namespace lfol
