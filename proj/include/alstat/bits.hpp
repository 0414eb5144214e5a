#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace alstat {

/// Unpacked bit sequence. Code lengths in this project are small except for
/// canonical bitmap serializations, so one byte per bit keeps things simple.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::string_view zeros_ones);

  std::size_t size() const { return b_.size(); }
  bool empty() const { return b_.empty(); }
  int bit(std::size_t i) const { return b_[i]; }
  void push_back(int bit) { b_.push_back(static_cast<std::uint8_t>(bit & 1)); }
  void append(const BitVec& other) { b_.insert(b_.end(), other.b_.begin(), other.b_.end()); }

  std::string to_string() const;

  bool operator==(const BitVec& o) const { return b_ == o.b_; }
  /// Order by (length, bits); used for deterministic tie-breaking.
  bool operator<(const BitVec& o) const {
    if (b_.size() != o.b_.size()) return b_.size() < o.b_.size();
    return b_ < o.b_;
  }
  bool is_prefix_of(const BitVec& o) const;

 private:
  std::vector<std::uint8_t> b_;
};

class BitWriter {
 public:
  void bit(int v) { out_.push_back(v); }
  void uint(std::uint64_t value, int width);  // MSB first
  void gamma(std::uint64_t k);                // Elias gamma, k >= 1
  void delta(std::uint64_t k);                // Elias delta, k >= 1
  void bits(const BitVec& v) { out_.append(v); }
  const BitVec& result() const { return out_; }
  BitVec take() { return std::move(out_); }

 private:
  BitVec out_;
};

/// Reader over a BitVec; all reads fail soft (nullopt) on underflow so the
/// decoder can reject truncated codes.
class BitReader {
 public:
  explicit BitReader(const BitVec& v) : v_(&v) {}
  std::optional<int> bit();
  std::optional<std::uint64_t> uint(int width);
  std::optional<std::uint64_t> gamma();
  std::optional<std::uint64_t> delta();
  bool at_end() const { return pos_ == v_->size(); }
  std::size_t pos() const { return pos_; }

 private:
  const BitVec* v_;
  std::size_t pos_ = 0;
};

int gamma_len(std::uint64_t k);
int delta_len(std::uint64_t k);

/// floor(log2(k)) for k >= 1.
int ilog2(std::uint64_t k);
/// ceil(log2(k)) for k >= 1; the index width used to pick one of k items.
int index_width(std::uint64_t k);

}  // namespace alstat
