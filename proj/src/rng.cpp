#include "alstat/rng.hpp"

namespace alstat {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
  return splitmix64(splitmix64(seed ^ (stream * 0xd1342543de82ef95ull)) ^
                    (counter * 0xaf251af3b0f025b5ull));
}

std::uint64_t rng_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t* counter,
                        std::uint64_t bound) {
  // Rejection keeps the distribution exactly uniform.
  const std::uint64_t limit = bound * (~0ull / bound);
  while (true) {
    std::uint64_t v = rng_u64(seed, stream, (*counter)++);
    if (v < limit) return v % bound;
  }
}

}  // namespace alstat
