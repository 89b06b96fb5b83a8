#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ovdiam {

// Fixed-length 0/1 vector packed into 64-bit words. Coordinates are 0-based
// here; the 1-based [ell] convention lives in the reporting layer.
class BitVector {
 public:
  static constexpr std::size_t kWordBits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length)
      : size_(length), words_((length + kWordBits - 1) / kWordBits, 0) {}

  // Parses a string over {0,1}. Throws std::invalid_argument on any other
  // character; the caller owns line-number reporting.
  static BitVector from_string(std::string_view bits) {
    BitVector out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] == '1') {
        out.set(i);
      } else if (bits[i] != '0') {
        throw std::invalid_argument("character '" + std::string(1, bits[i]) +
                                    "' at column " + std::to_string(i + 1) +
                                    " is not 0 or 1");
      }
    }
    return out;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
  }

  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value) {
      words_[i / kWordBits] |= mask;
    } else {
      words_[i / kWordBits] &= ~mask;
    }
  }

  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  std::string to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
      if (test(i)) out[i] = '1';
    }
    return out;
  }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace ovdiam
