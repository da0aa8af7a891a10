#include "cantor/bit_word.hpp"

#include <ostream>
#include <stdexcept>

namespace cantor {

std::vector<std::uint64_t> BitWord::one_positions() const {
  std::vector<std::uint64_t> out;
  out.reserve(ones_count());
  for_each_one([&](std::uint64_t i) { out.push_back(i); });
  return out;
}

std::int64_t BitWord::first_mismatch(const BitWord& other) const {
  if (size_ != other.size_) {
    throw std::invalid_argument("first_mismatch: size mismatch");
  }
  for (std::size_t wi = 0; wi < words_.size(); ++wi) {
    const std::uint64_t diff = words_[wi] ^ other.words_[wi];
    if (diff != 0) {
      return static_cast<std::int64_t>(wi * 64 + std::countr_zero(diff));
    }
  }
  return -1;
}

std::string BitWord::to_string() const {
  std::string s(size_, '0');
  for_each_one([&](std::uint64_t i) { s[i] = '1'; });
  return s;
}

void BitWord::write_text(std::ostream& out) const {
  constexpr std::uint64_t kChunk = 1 << 20;
  std::string buffer;
  for (std::uint64_t start = 0; start < size_; start += kChunk) {
    const std::uint64_t stop = std::min(size_, start + kChunk);
    buffer.assign(stop - start, '0');
    for (std::uint64_t i = start; i < stop; ++i) {
      if (get(i)) buffer[i - start] = '1';
    }
    out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
  }
}

BitWord BitWord::from_string(std::string_view text) {
  BitWord w(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      w.set(i);
    } else if (text[i] != '0') {
      throw std::invalid_argument("BitWord::from_string: expected 0/1");
    }
  }
  return w;
}

}  // namespace cantor
