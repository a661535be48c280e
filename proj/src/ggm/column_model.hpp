#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "ggm/error.hpp"
#include "ggm/util.hpp"

namespace ggm {

// One column's off-diagonal edge pattern: a bit vector of length p-1 with a
// cached popcount. Bit k refers to the k-th variable in the reduced index
// space of the column (original indices with the column itself skipped).
class ColumnModel {
 public:
  ColumnModel() : len_(0), count_(0) {}
  explicit ColumnModel(int len)
      : bits_((len + 63) / 64, 0), len_(len), count_(0) {
    require(len >= 0, ErrorCode::InvalidArgument, "ColumnModel: negative length");
  }

  int length() const { return len_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool test(int k) const {
    return (bits_[static_cast<size_t>(k) >> 6] >> (k & 63)) & 1u;
  }

  void set(int k) {
    uint64_t& w = bits_[static_cast<size_t>(k) >> 6];
    uint64_t m = 1ULL << (k & 63);
    if (!(w & m)) {
      w |= m;
      ++count_;
    }
  }

  void clear(int k) {
    uint64_t& w = bits_[static_cast<size_t>(k) >> 6];
    uint64_t m = 1ULL << (k & 63);
    if (w & m) {
      w &= ~m;
      --count_;
    }
  }

  void flip(int k) {
    if (test(k)) clear(k); else set(k);
  }

  // Active coordinates in ascending order.
  std::vector<int> active() const {
    std::vector<int> out;
    out.reserve(count_);
    for (size_t w = 0; w < bits_.size(); ++w) {
      uint64_t x = bits_[w];
      while (x) {
        int b = std::countr_zero(x);
        out.push_back(static_cast<int>(w * 64 + b));
        x &= x - 1;
      }
    }
    return out;
  }

  std::vector<int> inactive() const {
    std::vector<int> out;
    out.reserve(len_ - count_);
    for (int k = 0; k < len_; ++k)
      if (!test(k)) out.push_back(k);
    return out;
  }

  int hamming(const ColumnModel& other) const {
    int d = 0;
    for (size_t w = 0; w < bits_.size(); ++w)
      d += std::popcount(bits_[w] ^ other.bits_[w]);
    return d;
  }

  uint64_t hash() const {
    uint64_t h = fnv1a(&len_, sizeof(len_));
    return fnv1a(bits_.data(), bits_.size() * sizeof(uint64_t), h);
  }

  bool operator==(const ColumnModel& other) const {
    return len_ == other.len_ && bits_ == other.bits_;
  }

  const std::vector<uint64_t>& words() const { return bits_; }

  // Builds a model from the low bits of a mask; only valid for len <= 64,
  // used by enumeration oracles and the oracle CLI command.
  static ColumnModel from_mask(int len, uint64_t mask) {
    require(len <= 64, ErrorCode::Capability, "from_mask: length > 64");
    ColumnModel m(len);
    if (len > 0) {
      m.bits_[0] = len == 64 ? mask : (mask & ((1ULL << len) - 1));
      m.count_ = std::popcount(m.bits_[0]);
    }
    return m;
  }

  uint64_t to_mask() const {
    require(len_ <= 64, ErrorCode::Capability, "to_mask: length > 64");
    return bits_.empty() ? 0 : bits_[0];
  }

 private:
  std::vector<uint64_t> bits_;
  int len_;
  int count_;
};

struct ColumnModelHash {
  size_t operator()(const ColumnModel& m) const {
    return static_cast<size_t>(m.hash());
  }
};

}  // namespace ggm
