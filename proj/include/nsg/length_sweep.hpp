#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "nsg/semigroup.hpp"

namespace nsg {

/// Read-only view of one length set L(n) held as a bitset over absolute lengths,
/// starting at word `lo_word`.
class LengthView {
 public:
  LengthView() = default;
  LengthView(Int n, Int lo_word, std::span<const std::uint64_t> words, bool nonempty)
      : n_(n), lo_word_(lo_word), words_(words), nonempty_(nonempty) {}

  Int element() const noexcept { return n_; }
  bool empty() const noexcept { return !nonempty_; }

  Int count() const noexcept {
    Int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  Int min() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return (lo_word_ + static_cast<Int>(i)) * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  Int max() const noexcept {
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i]) return (lo_word_ + static_cast<Int>(i)) * 64 + 63 - std::countl_zero(words_[i]);
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        fn((lo_word_ + static_cast<Int>(i)) * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  std::vector<Int> lengths() const {
    std::vector<Int> out;
    for_each([&](Int l) { out.push_back(l); });
    return out;
  }

  /// Distinct successive differences, sorted.
  std::vector<Int> gaps() const {
    std::vector<Int> out;
    Int prev = -1;
    for_each([&](Int l) {
      if (prev >= 0) out.push_back(l - prev);
      prev = l;
    });
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

 private:
  Int n_ = 0;
  Int lo_word_ = 0;
  std::span<const std::uint64_t> words_;
  bool nonempty_ = false;
};

/// Incremental length-set dynamic program L(0) = {0}, L(n) = ⋃ᵢ (L(n − nᵢ) + 1).
///
/// Only the last n_k + 1 sets are retained, each clipped to the word range that can
/// hold lengths in [⌈n/n_k⌉, ⌊n/n_1⌋], so memory is O(n_k · span) rather than O(N · span).
class LengthSweep {
 public:
  explicit LengthSweep(const NumericalSemigroup& s, const Limits& limits = {})
      : gens_(s.generators().begin(), s.generators().end()),
        limits_(limits),
        ring_(static_cast<std::size_t>(gens_.back()) + 1) {
    width_ = 2;
    arena_.assign(ring_ * width_, 0);
    slots_.assign(ring_, Slot{});
  }

  /// Next element to be produced by advance().
  Int next() const noexcept { return next_; }

  /// Computes L(next()) and returns its view.
  LengthView advance() {
    const Int n = next_;
    if (n > limits_.max_element)
      fail(ErrorKind::cap_exceeded, "element " + std::to_string(n) + " exceeds cap");
    const Int n1 = gens_.front();
    const Int nk = gens_.back();
    const Int lo_len = ceil_div(n, nk);
    const Int hi_len = n / n1;
    Slot& slot = slots_[index(n)];
    slot.nonempty = false;
    slot.lo_word = lo_len / 64;
    slot.nwords = hi_len >= lo_len ? hi_len / 64 - slot.lo_word + 1 : 0;
    if (slot.nwords > width_) grow(slot.nwords);
    std::uint64_t* dst = data(index(n));
    std::fill(dst, dst + slot.nwords, 0);
    if (n == 0) {
      dst[0] = 1;
      slot.nonempty = true;
    } else {
      for (Int g : gens_) {
        if (g > n) break;
        const Slot& ps = slots_[index(n - g)];
        if (!ps.nonempty) continue;
        const std::uint64_t* src = data(index(n - g));
        for (Int i = 0; i < ps.nwords; ++i) {
          const std::uint64_t x = src[i];
          if (!x) continue;
          const Int a = ps.lo_word + i - slot.lo_word;
          if (a >= 0 && a < slot.nwords) dst[a] |= x << 1;
          if (a + 1 >= 0 && a + 1 < slot.nwords) dst[a + 1] |= x >> 63;
        }
        slot.nonempty = true;
      }
    }
    ++next_;
    return view(n);
  }

  /// View of L(n) for an n still held in the ring (next() − n_k − 1 ≤ n < next()).
  LengthView view(Int n) const {
    const Slot& s = slots_[index(n)];
    return LengthView(n, s.lo_word, std::span<const std::uint64_t>(data(index(n)), static_cast<std::size_t>(s.nwords)),
                      s.nonempty);
  }

 private:
  struct Slot {
    Int lo_word = 0;
    Int nwords = 0;
    bool nonempty = false;
  };

  std::size_t index(Int n) const noexcept { return static_cast<std::size_t>(n % static_cast<Int>(ring_)); }
  std::uint64_t* data(std::size_t i) noexcept { return arena_.data() + i * static_cast<std::size_t>(width_); }
  const std::uint64_t* data(std::size_t i) const noexcept {
    return arena_.data() + i * static_cast<std::size_t>(width_);
  }

  void grow(Int needed) {
    Int w = width_;
    while (w < needed) w *= 2;
    if (static_cast<std::size_t>(w) * ring_ > limits_.max_sweep_words)
      fail(ErrorKind::cap_exceeded, "length-set sweep would need " + std::to_string(static_cast<std::size_t>(w) * ring_) +
                                        " words");
    std::vector<std::uint64_t> fresh(ring_ * static_cast<std::size_t>(w), 0);
    for (std::size_t i = 0; i < ring_; ++i)
      std::copy_n(arena_.data() + i * static_cast<std::size_t>(width_), std::min(slots_[i].nwords, width_),
                  fresh.data() + i * static_cast<std::size_t>(w));
    arena_ = std::move(fresh);
    width_ = w;
  }

  std::vector<Int> gens_;
  Limits limits_;
  std::size_t ring_;
  Int width_ = 0;
  std::vector<std::uint64_t> arena_;
  std::vector<Slot> slots_;
  Int next_ = 0;
};

}  // namespace nsg
