#pragma once

#include <atomic>
#include <cassert>
#include <cstdint>

namespace lfol {

/// A successor reference and a one-bit deletion mark packed into one word.
///
/// The mark lives in the low-order bit of the reference, which is always
/// zero for node addresses. Reference and mark are therefore read, written
/// and compared together by a single atomic operation.
template <class NodeT>
class LinkWord {
 public:
  static constexpr std::uintptr_t kMarkBit = 1;

  constexpr LinkWord() = default;

  LinkWord(NodeT* succ, bool mark)
      : bits_(reinterpret_cast<std::uintptr_t>(succ) | (mark ? kMarkBit : 0)) {
    assert((reinterpret_cast<std::uintptr_t>(succ) & kMarkBit) == 0 &&
           "node reference must leave the mark bit clear");
  }

  static constexpr LinkWord from_bits(std::uintptr_t bits) {
    LinkWord w;
    w.bits_ = bits;
    return w;
  }

  NodeT* ref() const { return reinterpret_cast<NodeT*>(bits_ & ~kMarkBit); }
  bool marked() const { return (bits_ & kMarkBit) != 0; }
  LinkWord with_mark() const { return from_bits(bits_ | kMarkBit); }
  LinkWord without_mark() const { return from_bits(bits_ & ~kMarkBit); }
  constexpr std::uintptr_t bits() const { return bits_; }

  friend bool operator==(LinkWord, LinkWord) = default;

 private:
  std::uintptr_t bits_ = 0;
};

template <class NodeT>
LinkWord<NodeT> make_link(NodeT* succ, bool mark) {
  return LinkWord<NodeT>(succ, mark);
}

template <class NodeT>
NodeT* ref_of(LinkWord<NodeT> w) {
  return w.ref();
}

template <class NodeT>
bool mark_of(LinkWord<NodeT> w) {
  return w.marked();
}

/// Atomic cell holding a LinkWord. Loads are acquire, stores release and
/// read-modify-write operations acq_rel unless a caller asks otherwise.
template <class NodeT>
class AtomicLink {
 public:
  using Word = LinkWord<NodeT>;

  AtomicLink() = default;
  explicit AtomicLink(Word w) : bits_(w.bits()) {}
  AtomicLink(const AtomicLink&) = delete;
  AtomicLink& operator=(const AtomicLink&) = delete;

  Word load(std::memory_order order = std::memory_order_acquire) const {
    return Word::from_bits(bits_.load(order));
  }

  void store(Word w, std::memory_order order = std::memory_order_release) {
    bits_.store(w.bits(), order);
  }

  /// On failure `expected` is overwritten with the word actually observed.
  bool compare_exchange(Word& expected, Word desired) {
    std::uintptr_t raw = expected.bits();
    const bool ok = bits_.compare_exchange_strong(
        raw, desired.bits(), std::memory_order_acq_rel, std::memory_order_acquire);
    if (!ok) expected = Word::from_bits(raw);
    return ok;
  }

  /// Sets the mark unconditionally and returns the prior word.
  Word fetch_mark() {
    return Word::from_bits(bits_.fetch_or(Word::kMarkBit, std::memory_order_acq_rel));
  }

 private:
  std::atomic<std::uintptr_t> bits_{0};
  static_assert(std::atomic<std::uintptr_t>::is_always_lock_free);
};

enum class FetchOrLowering { native, cas_loop };

/// How the compiler lowers a fetch-or whose full prior value is consumed.
/// x86 has `lock or` but no instruction returning the old word, so the
/// compiler emits a cmpxchg loop there.
constexpr FetchOrLowering fetch_or_lowering() {
#if defined(__aarch64__) && defined(__ARM_FEATURE_ATOMICS)
  return FetchOrLowering::native;  // LSE ldsetal
#else
  return FetchOrLowering::cas_loop;
#endif
}

constexpr const char* fetch_or_lowering_name(FetchOrLowering l) {
  return l == FetchOrLowering::native ? "native" : "cas-loop";
}

}  // namespace lfol
