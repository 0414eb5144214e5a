#pragma once

#include <cstdint>

#include "alstat/bitstring.hpp"

namespace alstat {

/// Arithmetic in GF(2^k), 2 <= k <= 16. The modulus is not a trusted
/// constant: field(k) scans candidate polynomials in increasing order and
/// keeps the first one that survives a brute-force irreducibility check.
class GF2k {
 public:
  static const GF2k& field(int k);

  int k() const { return k_; }
  std::uint32_t modulus() const { return modulus_; }
  std::uint32_t order() const { return 1u << k_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  BitString to_bits(std::uint32_t a) const { return BitString(k_, a); }

  static bool poly_irreducible(std::uint32_t poly, int degree);

 private:
  explicit GF2k(int k);
  int k_;
  std::uint32_t modulus_;
};

}  // namespace alstat
