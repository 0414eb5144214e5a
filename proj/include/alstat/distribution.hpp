#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alstat/bits.hpp"
#include "alstat/bitstring.hpp"
#include "alstat/exact.hpp"
#include "alstat/model.hpp"

namespace alstat {

/// Probability distribution on B^n with exact positive rational
/// probabilities summing to one. Canonical form: support sorted by value,
/// probabilities in lowest terms.
class RationalDistribution {
 public:
  RationalDistribution(int n, std::vector<std::pair<std::uint32_t, Rat>> entries);

  int universe_bits() const { return n_; }
  const std::vector<std::pair<std::uint32_t, Rat>>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  Rat prob(std::uint32_t v) const;  // 0 when outside the support
  Rat prob(const BitString& x) const { return x.length() == n_ ? prob(x.value()) : Rat(0); }
  FiniteModel support_model() const;

  /// Product of element probabilities; 0 if any element is off-support.
  Rat likelihood(const StringTuple& xs) const;

  std::string serialize() const;

  /// Shannon code for the support: lengths ceil(-log2 P(y)), codewords cut
  /// from exact cumulative probabilities in decreasing-probability order.
  /// Prefix-free by the classic argument.
  int shannon_len(std::uint32_t v) const;
  BitVec shannon_code(std::uint32_t v) const;
  std::optional<std::uint32_t> shannon_decode(BitReader& r) const;

  bool operator==(const RationalDistribution& o) const {
    return n_ == o.n_ && entries_ == o.entries_;
  }
  bool operator<(const RationalDistribution& o) const;

 private:
  void build_shannon() const;

  std::uint8_t n_;
  std::vector<std::pair<std::uint32_t, Rat>> entries_;
  mutable std::vector<std::pair<BitVec, std::uint32_t>> shannon_;  // built lazily
};

/// Uniform distribution on a model: every element gets exactly 1/|A|.
RationalDistribution uniform_over(const FiniteModel& a);

/// Weighted mixture of uniform distributions over models:
/// P(y) = sum of w_i/|A_i| over components containing y.
RationalDistribution mixture(const std::vector<std::pair<Rat, FiniteModel>>& components);

}  // namespace alstat
