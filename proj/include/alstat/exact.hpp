#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace alstat {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline constexpr std::int64_t kMillibitsPerBit = 1024;

/// 2^e as an exact rational, e may be negative.
Rat pow2r(std::int64_t e);

/// floor(log2(q)) for q > 0.
std::int64_t floor_log2(const Rat& q);

/// floor(1024 * log2(q)) for q > 0, exact.
///
/// Dyadic arguments take a fast path; otherwise ten exact squarings extract
/// the fractional millibit digits. Results are memoized.
std::int64_t floor_log2_millibits(const Rat& q);

/// floor(1024 * (-log2(q))) for q > 0; the fixed-point value of a quantity
/// written as -log2(q).
inline std::int64_t neg_log2_millibits(const Rat& q) { return floor_log2_millibits(Rat(1) / q); }

/// ceil(-log2(q)) in whole bits: the least b with q >= 2^-b. Equals
/// -floor(log2(q)).
inline std::int64_t ceil_neg_log2(const Rat& q) { return -floor_log2(q); }

/// Exact dyadic accumulator for sums of 2^-len terms.
class DyadicSum {
 public:
  void add_pow2(std::int64_t neg_exponent);  // adds 2^-neg_exponent
  void add(const DyadicSum& other);
  Rat value() const;
  bool is_zero() const { return num_ == 0; }

 private:
  BigInt num_ = 0;
  std::int64_t exp_ = 0;  // value = num_ / 2^exp_
};

}  // namespace alstat
