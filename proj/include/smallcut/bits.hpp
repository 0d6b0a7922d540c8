#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace smallcut {

// Fixed-width bit vector over GF(2). Used both for b-bit edge values and for
// edge subsets (width = number of edges). Bit 0 is the first character of the
// string form, so from_string("010").test(1) == true.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(int width) : width_(width), words_(word_count(width), 0) {}

  static BitVec from_string(const std::string& s) {
    BitVec b(static_cast<int>(s.size()));
    for (int i = 0; i < b.width_; ++i) {
      assert(s[i] == '0' || s[i] == '1');
      if (s[i] == '1') b.set(i, true);
    }
    return b;
  }

  // Bit i of the result equals (value >> i) & 1; value must fit in `width`.
  static BitVec from_u64(int width, std::uint64_t value) {
    assert(width >= 0);
    assert(width >= 64 || (value >> width) == 0);
    BitVec b(width);
    if (width > 0) b.words_[0] = value;
    return b;
  }

  int width() const { return width_; }

  bool test(int i) const {
    assert(i >= 0 && i < width_);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(int i, bool v) {
    assert(i >= 0 && i < width_);
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  bool zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !zero(); }

  int popcount() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  BitVec& operator^=(const BitVec& o) {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  BitVec& operator&=(const BitVec& o) {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  BitVec& operator|=(const BitVec& o) {
    assert(width_ == o.width_);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  bool operator==(const BitVec& o) const {
    return width_ == o.width_ && words_ == o.words_;
  }
  bool operator!=(const BitVec& o) const { return !(*this == o); }

  // Total order for grouping/sorting; compares low words first.
  bool operator<(const BitVec& o) const {
    if (width_ != o.width_) return width_ < o.width_;
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
    return false;
  }

  // GF(2) inner product.
  int dot(const BitVec& o) const {
    assert(width_ == o.width_);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) acc ^= words_[k] & o.words_[k];
    return std::popcount(acc) & 1;
  }

  // Bits [at, at + count) as an integer, bit `at` in the low position.
  std::uint64_t extract(int at, int count) const {
    assert(count >= 0 && count <= 64);
    std::uint64_t out = 0;
    for (int i = 0; i < count && at + i < width_; ++i)
      if (test(at + i)) out |= std::uint64_t{1} << i;
    return out;
  }

  // Lowest set bit, -1 if none.
  int first_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return static_cast<int>(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  template <class F>
  void for_each_set(F f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        f(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<int> set_bits() const {
    std::vector<int> out;
    for_each_set([&](int i) { out.push_back(i); });
    return out;
  }

  std::string str() const {
    std::string s(width_, '0');
    for (int i = 0; i < width_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(width_);
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

 private:
  static std::size_t word_count(int width) {
    assert(width >= 0);
    return (static_cast<std::size_t>(width) + 63) / 64;
  }

  int width_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& b) const { return b.hash(); }
};

// Edge subsets are bit vectors of width m indexed by edge id.
using EdgeSet = BitVec;

}  // namespace smallcut
