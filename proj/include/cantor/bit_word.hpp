#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cantor {

/// Packed binary word. Bit i lives at word i/64, offset i%64; index 0 is the
/// most significant (leftmost) symbol of the textual form.
class BitWord {
 public:
  BitWord() = default;
  explicit BitWord(std::uint64_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::uint64_t size() const noexcept { return size_; }

  bool get(std::uint64_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }

  std::uint64_t ones_count() const {
    std::uint64_t n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
  }

  /// Indices of all set bits, ascending.
  std::vector<std::uint64_t> one_positions() const;

  /// Calls f(index) for every set bit, ascending.
  template <class F>
  void for_each_one(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const unsigned bit = std::countr_zero(w);
        f(std::uint64_t(wi) * 64 + bit);
        w &= w - 1;
      }
    }
  }

  bool operator==(const BitWord& other) const {
    return size_ == other.size_ && words_ == other.words_;
  }

  /// Index of the first differing bit, or -1 when equal. Sizes must match.
  std::int64_t first_mismatch(const BitWord& other) const;

  /// ASCII '0'/'1' rendering, index 0 first. Intended for small words;
  /// use write_text for streaming large ones.
  std::string to_string() const;

  /// Streams the ASCII form (no trailing newline).
  void write_text(std::ostream& out) const;

  static BitWord from_string(std::string_view text);

  std::span<const std::uint64_t> words() const noexcept {
    return {words_.data(), words_.size()};
  }

 private:
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace cantor
