#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "smallcut/bits.hpp"

namespace smallcut {

using Bytes = std::vector<std::uint8_t>;

// Per-node state. Everything a node knows must live here (or be derivable
// from its NodeCtx), which is what makes store snapshots a faithful record
// of a node's knowledge: two executions are indistinguishable to a node iff
// its snapshots agree round by round.
class Store {
 public:
  bool contains(const std::string& key) const { return map_.count(key) != 0; }
  void erase(const std::string& key) { map_.erase(key); }
  bool empty() const { return map_.empty(); }

  void put_raw(const std::string& key, Bytes value) { map_[key] = std::move(value); }
  const Bytes& raw(const std::string& key) const {
    auto it = map_.find(key);
    if (it == map_.end()) throw std::out_of_range("store key missing: " + key);
    return it->second;
  }

  void put_u64(const std::string& key, std::uint64_t v) {
    Bytes b(8);
    for (int i = 0; i < 8; ++i) b[i] = static_cast<std::uint8_t>(v >> (8 * i));
    put_raw(key, std::move(b));
  }
  std::uint64_t get_u64(const std::string& key) const {
    const Bytes& b = raw(key);
    if (b.size() != 8) throw std::out_of_range("store key is not a u64: " + key);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
    return v;
  }
  std::uint64_t get_u64_or(const std::string& key, std::uint64_t fallback) const {
    return contains(key) ? get_u64(key) : fallback;
  }

  void put_flag(const std::string& key) { put_raw(key, Bytes{1}); }

  void put_bits(const std::string& key, const BitVec& v) {
    Bytes b;
    std::uint32_t w = static_cast<std::uint32_t>(v.width());
    for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>(w >> (8 * i)));
    std::uint8_t acc = 0;
    for (int i = 0; i < v.width(); ++i) {
      if (v.test(i)) acc |= static_cast<std::uint8_t>(1u << (i % 8));
      if (i % 8 == 7 || i + 1 == v.width()) {
        b.push_back(acc);
        acc = 0;
      }
    }
    put_raw(key, std::move(b));
  }
  BitVec get_bits(const std::string& key) const {
    const Bytes& b = raw(key);
    if (b.size() < 4) throw std::out_of_range("store key is not a bit vector: " + key);
    std::uint32_t w = 0;
    for (int i = 0; i < 4; ++i) w |= static_cast<std::uint32_t>(b[i]) << (8 * i);
    BitVec v(static_cast<int>(w));
    for (std::uint32_t i = 0; i < w; ++i)
      if ((b[4 + i / 8] >> (i % 8)) & 1) v.set(static_cast<int>(i), true);
    return v;
  }

  void put_u64s(const std::string& key, const std::vector<std::uint64_t>& vs) {
    Bytes b;
    for (std::uint64_t v : vs)
      for (int i = 0; i < 8; ++i) b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    put_raw(key, std::move(b));
  }
  std::vector<std::uint64_t> get_u64s(const std::string& key) const {
    const Bytes& b = raw(key);
    std::vector<std::uint64_t> vs(b.size() / 8);
    for (std::size_t k = 0; k < vs.size(); ++k)
      for (int i = 0; i < 8; ++i)
        vs[k] |= static_cast<std::uint64_t>(b[8 * k + i]) << (8 * i);
    return vs;
  }

  // Canonical byte serialization of the entire store; equal snapshots <=>
  // equal stores.
  Bytes snapshot() const {
    Bytes out;
    auto put_len = [&](std::size_t len) {
      for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(len >> (8 * i)));
    };
    for (const auto& [key, value] : map_) {
      put_len(key.size());
      out.insert(out.end(), key.begin(), key.end());
      put_len(value.size());
      out.insert(out.end(), value.begin(), value.end());
    }
    return out;
  }

  const std::map<std::string, Bytes>& entries() const { return map_; }

 private:
  std::map<std::string, Bytes> map_;
};

// A Store view with a key prefix; lets pipelined protocol instances share
// one node store without clashing.
class StoreRef {
 public:
  explicit StoreRef(Store& s, std::string prefix = "")
      : store_(&s), prefix_(std::move(prefix)) {}

  bool contains(const std::string& k) const { return store_->contains(prefix_ + k); }
  void erase(const std::string& k) { store_->erase(prefix_ + k); }
  void put_raw(const std::string& k, Bytes v) { store_->put_raw(prefix_ + k, std::move(v)); }
  const Bytes& raw(const std::string& k) const { return store_->raw(prefix_ + k); }
  void put_u64(const std::string& k, std::uint64_t v) { store_->put_u64(prefix_ + k, v); }
  std::uint64_t get_u64(const std::string& k) const { return store_->get_u64(prefix_ + k); }
  std::uint64_t get_u64_or(const std::string& k, std::uint64_t f) const {
    return store_->get_u64_or(prefix_ + k, f);
  }
  void put_flag(const std::string& k) { store_->put_flag(prefix_ + k); }
  void put_bits(const std::string& k, const BitVec& v) { store_->put_bits(prefix_ + k, v); }
  BitVec get_bits(const std::string& k) const { return store_->get_bits(prefix_ + k); }
  void put_u64s(const std::string& k, const std::vector<std::uint64_t>& v) {
    store_->put_u64s(prefix_ + k, v);
  }
  std::vector<std::uint64_t> get_u64s(const std::string& k) const {
    return store_->get_u64s(prefix_ + k);
  }

  StoreRef with_prefix(const std::string& extra) const {
    return StoreRef(*store_, prefix_ + extra);
  }

 private:
  Store* store_;
  std::string prefix_;
};

}  // namespace smallcut
