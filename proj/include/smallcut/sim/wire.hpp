#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "smallcut/bits.hpp"

namespace smallcut {

// Bit-level message packing. Message payloads are BitVecs; protocols build
// them with BitWriter and parse them with BitReader so that payload widths
// (and hence the bandwidth meter) count exactly the bits a field needs.
class BitWriter {
 public:
  void put(std::uint64_t value, int bits) {
    assert(bits >= 0 && bits <= 64);
    assert(bits == 64 || value < (bits == 0 ? 1ull : (1ull << bits)) || bits == 0);
    for (int i = 0; i < bits; ++i) bits_.push_back((value >> i) & 1u);
  }
  void put_bits(const BitVec& v) {
    for (int i = 0; i < v.width(); ++i) bits_.push_back(v.test(i));
  }
  BitVec take() const {
    BitVec out(static_cast<int>(bits_.size()));
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i]) out.set(static_cast<int>(i), true);
    return out;
  }
  int width() const { return static_cast<int>(bits_.size()); }

 private:
  std::vector<bool> bits_;
};

class BitReader {
 public:
  explicit BitReader(const BitVec& v) : v_(&v) {}

  std::uint64_t get(int bits) {
    assert(bits >= 0 && bits <= 64);
    assert(pos_ + bits <= v_->width());
    std::uint64_t out = v_->extract(pos_, bits);
    pos_ += bits;
    return out;
  }
  BitVec get_bits(int count) {
    assert(count >= 0 && pos_ + count <= v_->width());
    BitVec out(count);
    for (int i = 0; i < count; ++i) out.set(i, v_->test(pos_ + i));
    pos_ += count;
    return out;
  }
  int remaining() const { return v_->width() - pos_; }
  bool done() const { return remaining() == 0; }

 private:
  const BitVec* v_;
  int pos_ = 0;
};

}  // namespace smallcut
