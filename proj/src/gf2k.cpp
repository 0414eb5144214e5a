#include "alstat/gf2k.hpp"

#include <map>

#include "alstat/bits.hpp"
#include "alstat/errors.hpp"

namespace alstat {

namespace {

int poly_degree(std::uint64_t p) { return ilog2(p); }

// Remainder of polynomial division over GF(2).
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  int dm = poly_degree(m);
  while (a >= (1ull << dm)) {
    int da = poly_degree(a);
    a ^= m << (da - dm);
  }
  return a;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a >> poly_degree(m)) a = poly_mod(a, m);
  }
  return poly_mod(r, m);
}

}  // namespace

bool GF2k::poly_irreducible(std::uint32_t poly, int degree) {
  if (poly_degree(poly) != degree) return false;
  if ((poly & 1) == 0) return false;  // divisible by x
  for (int d = 1; 2 * d <= degree; ++d) {
    for (std::uint64_t q = (1ull << d); q < (2ull << d); ++q) {
      if (poly_mod(poly, q) == 0) return false;
    }
  }
  return true;
}

GF2k::GF2k(int k) : k_(k) {
  if (k < 2 || k > 16) fail(Errc::ObjectOutOfBounds, "field exponent must be in [2,16]");
  modulus_ = 0;
  for (std::uint32_t cand = (1u << k); cand < (2u << k); ++cand) {
    if (poly_irreducible(cand, k)) {
      modulus_ = cand;
      break;
    }
  }
  if (!modulus_) fail(Errc::Internal, "no irreducible polynomial found");
}

const GF2k& GF2k::field(int k) {
  static std::map<int, GF2k> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, GF2k(k)).first;
  return it->second;
}

std::uint32_t GF2k::mul(std::uint32_t a, std::uint32_t b) const {
  return static_cast<std::uint32_t>(poly_mulmod(a, b, modulus_));
}

std::uint32_t GF2k::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t GF2k::inv(std::uint32_t a) const {
  if (a == 0) fail(Errc::ZeroLikelihood, "zero has no inverse");
  return pow(a, (1ull << k_) - 2);
}

}  // namespace alstat
