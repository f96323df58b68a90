#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace netfield::detail {

// Bitset over Z_n supporting cyclic translation, used for sumsets of
// discrete logarithms.
class ResidueSet {
 public:
  explicit ResidueSet(std::uint32_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::uint32_t modulus() const noexcept { return n_; }

  void insert(std::uint32_t x) { words_[x / 64] |= std::uint64_t{1} << (x % 64); }
  bool contains(std::uint32_t x) const { return (words_[x / 64] >> (x % 64)) & 1U; }

  std::uint32_t size() const noexcept {
    std::uint32_t c = 0;
    for (auto w : words_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }

  // this |= (other + shift) mod n
  void or_translate(const ResidueSet& other, std::uint32_t shift) {
    shift %= n_;
    if (words_.size() == 1) {
      const std::uint64_t mask = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
      const std::uint64_t w = other.words_[0];
      const std::uint64_t rot = shift == 0 ? w : ((w << shift) | (w >> (n_ - shift)));
      words_[0] |= rot & mask;
      return;
    }
    for (std::uint32_t x = 0; x < n_;) {
      const std::uint64_t w = other.words_[x / 64];
      if (w == 0) {
        x += 64;
        continue;
      }
      for (std::uint64_t bits = w; bits != 0; bits &= bits - 1) {
        const auto b = x + static_cast<std::uint32_t>(std::countr_zero(bits));
        const auto y = b + shift;
        insert(y >= n_ ? y - n_ : y);
      }
      x += 64;
    }
  }

  /// {a + b : a in this, b in row}
  ResidueSet plus(const std::vector<std::uint32_t>& row) const {
    ResidueSet out(n_);
    for (auto a : row) out.or_translate(*this, a);
    return out;
  }

  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t x = 0; x < n_; ++x) {
      if (contains(x)) out.push_back(x);
    }
    return out;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace netfield::detail
