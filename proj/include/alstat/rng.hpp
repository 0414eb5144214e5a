#pragma once

#include <cstdint>

namespace alstat {

/// Counter-based splittable RNG: every draw is a pure function of
/// (seed, stream, counter), so transcripts replay exactly and independent
/// streams can run in parallel.
std::uint64_t rng_u64(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Uniform value in [0, bound) by rejection; bound >= 1. Consumes one or
/// more counters starting at *counter (advanced past the draws used).
std::uint64_t rng_below(std::uint64_t seed, std::uint64_t stream, std::uint64_t* counter,
                        std::uint64_t bound);

}  // namespace alstat
