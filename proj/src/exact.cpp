#include "alstat/exact.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace alstat {

Rat pow2r(std::int64_t e) {
  BigInt p = BigInt(1) << static_cast<unsigned>(e < 0 ? -e : e);
  return e >= 0 ? Rat(p) : Rat(BigInt(1), p);
}

namespace {

bool is_pow2(const BigInt& v) {
  if (v <= 0) return false;
  BigInt t = v & (v - 1);
  return t == 0;
}

std::int64_t msb_of(const BigInt& v) { return static_cast<std::int64_t>(boost::multiprecision::msb(v)); }

}  // namespace

std::int64_t floor_log2(const Rat& q) {
  if (q <= 0) throw std::domain_error("floor_log2: q <= 0");
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  std::int64_t e = msb_of(num) - msb_of(den);
  // 2^e <= q ?  i.e. den * 2^e <= num
  auto le_pow2 = [&](std::int64_t k) {
    if (k >= 0) return den << static_cast<unsigned>(k) <= num;
    return den <= num << static_cast<unsigned>(-k);
  };
  if (!le_pow2(e)) --e;
  if (le_pow2(e + 1)) ++e;
  return e;
}

std::int64_t floor_log2_millibits(const Rat& q) {
  if (q <= 0) throw std::domain_error("floor_log2_millibits: q <= 0");
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (is_pow2(num) && is_pow2(den))
    return kMillibitsPerBit * (msb_of(num) - msb_of(den));

  static std::map<std::pair<BigInt, BigInt>, std::int64_t> memo;
  auto key = std::make_pair(num, den);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  const std::int64_t e = floor_log2(q);
  // r = q / 2^e in [1, 2); extract ten fractional bits by exact squaring.
  BigInt rn = num, rd = den;
  if (e >= 0)
    rd <<= static_cast<unsigned>(e);
  else
    rn <<= static_cast<unsigned>(-e);
  std::int64_t frac = 0;
  for (int i = 0; i < 10; ++i) {
    rn *= rn;
    rd *= rd;
    frac <<= 1;
    if (rn >= rd * 2) {
      frac |= 1;
      rd <<= 1;
    }
  }
  std::int64_t result = e * kMillibitsPerBit + frac;
  memo.emplace(std::move(key), result);
  return result;
}

void DyadicSum::add_pow2(std::int64_t neg_exponent) {
  if (neg_exponent > exp_) {
    num_ <<= static_cast<unsigned>(neg_exponent - exp_);
    exp_ = neg_exponent;
  }
  num_ += BigInt(1) << static_cast<unsigned>(exp_ - neg_exponent);
}

void DyadicSum::add(const DyadicSum& other) {
  if (other.num_ == 0) return;
  if (other.exp_ > exp_) {
    num_ <<= static_cast<unsigned>(other.exp_ - exp_);
    exp_ = other.exp_;
  }
  num_ += other.num_ << static_cast<unsigned>(exp_ - other.exp_);
}

Rat DyadicSum::value() const {
  if (num_ == 0) return Rat(0);
  return Rat(num_, BigInt(1) << static_cast<unsigned>(exp_));
}

}  // namespace alstat
