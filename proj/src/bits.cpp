#include "alstat/bits.hpp"

#include <stdexcept>

namespace alstat {

BitVec::BitVec(std::string_view zeros_ones) {
  b_.reserve(zeros_ones.size());
  for (char c : zeros_ones) {
    if (c != '0' && c != '1') throw std::invalid_argument("BitVec: expected 0/1");
    b_.push_back(static_cast<std::uint8_t>(c - '0'));
  }
}

std::string BitVec::to_string() const {
  std::string s;
  s.reserve(b_.size());
  for (auto v : b_) s.push_back(static_cast<char>('0' + v));
  return s;
}

bool BitVec::is_prefix_of(const BitVec& o) const {
  if (b_.size() >= o.b_.size()) return false;
  for (std::size_t i = 0; i < b_.size(); ++i)
    if (b_[i] != o.b_[i]) return false;
  return true;
}

int ilog2(std::uint64_t k) {
  int r = -1;
  while (k) {
    k >>= 1;
    ++r;
  }
  return r;
}

int index_width(std::uint64_t k) {
  if (k <= 1) return 0;
  return ilog2(k - 1) + 1;
}

int gamma_len(std::uint64_t k) { return 2 * ilog2(k) + 1; }

int delta_len(std::uint64_t k) {
  int L = ilog2(k);
  return L + gamma_len(static_cast<std::uint64_t>(L) + 1);
}

void BitWriter::uint(std::uint64_t value, int width) {
  for (int i = width - 1; i >= 0; --i) out_.push_back(static_cast<int>((value >> i) & 1));
}

void BitWriter::gamma(std::uint64_t k) {
  int L = ilog2(k);
  for (int i = 0; i < L; ++i) out_.push_back(0);
  uint(k, L + 1);
}

void BitWriter::delta(std::uint64_t k) {
  int L = ilog2(k);
  gamma(static_cast<std::uint64_t>(L) + 1);
  uint(k & ((L == 63) ? ~0ull >> 1 : ((1ull << L) - 1)), L);
}

std::optional<int> BitReader::bit() {
  if (pos_ >= v_->size()) return std::nullopt;
  return v_->bit(pos_++);
}

std::optional<std::uint64_t> BitReader::uint(int width) {
  if (pos_ + static_cast<std::size_t>(width) > v_->size()) return std::nullopt;
  std::uint64_t r = 0;
  for (int i = 0; i < width; ++i) r = (r << 1) | static_cast<std::uint64_t>(v_->bit(pos_++));
  return r;
}

std::optional<std::uint64_t> BitReader::gamma() {
  int zeros = 0;
  while (true) {
    auto b = bit();
    if (!b) return std::nullopt;
    if (*b == 1) break;
    if (++zeros > 62) return std::nullopt;
  }
  auto rest = uint(zeros);
  if (!rest) return std::nullopt;
  return (1ull << zeros) | *rest;
}

std::optional<std::uint64_t> BitReader::delta() {
  auto lp1 = gamma();
  if (!lp1 || *lp1 == 0 || *lp1 > 63) return std::nullopt;
  int L = static_cast<int>(*lp1 - 1);
  auto rest = uint(L);
  if (!rest) return std::nullopt;
  return (1ull << L) | *rest;
}

}  // namespace alstat
