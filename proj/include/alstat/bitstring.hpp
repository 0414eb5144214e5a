#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alstat/errors.hpp"

namespace alstat {

/// Fixed-length binary string, at most 32 bits. The description system
/// itself admits strings up to length 24; the extra headroom exists for the
/// finite-plane constructions whose raw encodings reach 2k <= 32 bits.
class BitString {
 public:
  BitString() : n_(1), v_(0) {}
  BitString(int n, std::uint32_t value);
  static BitString parse(const std::string& zeros_ones);
  static BitString zeros(int n) { return BitString(n, 0); }

  int length() const { return n_; }
  std::uint32_t value() const { return v_; }
  int bit(int i) const { return static_cast<int>((v_ >> (n_ - 1 - i)) & 1); }  // i = 0 is leftmost
  std::string to_string() const;

  BitString concat(const BitString& o) const;
  BitString prefix(int len) const;

  /// Lexicographic on (length, bits).
  bool operator<(const BitString& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    return v_ < o.v_;
  }
  bool operator==(const BitString& o) const { return n_ == o.n_ && v_ == o.v_; }

 private:
  std::uint8_t n_;
  std::uint32_t v_;
};

/// Ordered tuple of equal-length strings, l >= 1. A 1-tuple is identified
/// with its only element everywhere complexities are concerned.
class StringTuple {
 public:
  explicit StringTuple(std::vector<BitString> elems);
  static StringTuple single(const BitString& x) { return StringTuple({x}); }

  int length_n() const { return elems_[0].length(); }
  int size_l() const { return static_cast<int>(elems_.size()); }
  const BitString& at(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  const std::vector<BitString>& elements() const { return elems_; }
  std::string to_string() const;

  bool operator==(const StringTuple& o) const { return elems_ == o.elems_; }
  bool operator<(const StringTuple& o) const;

 private:
  std::vector<BitString> elems_;
};

}  // namespace alstat
