#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace zfsolve::la {

/// Packed GF(2) row-major matrix, 64 lanes per word. Bits past cols() in the
/// last word of each row are kept zero.
class BitMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kLanes = 64;

  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_((cols + kLanes - 1) / kLanes),
        words_(rows * stride_, 0) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * stride_ + c / kLanes] >> (c % kLanes)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    Word& w = words_[r * stride_ + c / kLanes];
    const Word bit = Word{1} << (c % kLanes);
    w = v ? (w | bit) : (w & ~bit);
  }
  void flip(std::size_t r, std::size_t c) {
    words_[r * stride_ + c / kLanes] ^= Word{1} << (c % kLanes);
  }

  std::span<Word> row(std::size_t r) { return {words_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }

  /// row(dst) ^= row(src)
  void xor_row(std::size_t dst, std::size_t src) {
    Word* d = words_.data() + dst * stride_;
    const Word* s = words_.data() + src * stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    Word* pa = words_.data() + a * stride_;
    Word* pb = words_.data() + b * stride_;
    for (std::size_t w = 0; w < stride_; ++w) std::swap(pa[w], pb[w]);
  }

  std::size_t popcount() const {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

/// lhs * rhs over GF(2). For each set bit (i,k) of lhs, row i of the result
/// accumulates row k of rhs, one word at a time.
BitMatrix multiply(const BitMatrix& lhs, const BitMatrix& rhs);

/// Rank over GF(2) by packed row reduction.
std::size_t rank(BitMatrix m);

}  // namespace zfsolve::la
