#pragma once

#include <array>
#include <cstdint>

namespace qnk {

/// xoshiro256** with splitmix64 seeding.  Fixed algorithm so that seeded runs
/// reproduce bit-for-bit on every platform; `fork` derives an independent
/// substream from a stream id, which keeps parallel scans order-independent.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next();

    /// uniform double in [0, 1), 53 bits
    double uniform();
    double uniform(double lo, double hi);
    /// uniform integer in [lo, hi], inclusive
    long long uniform_int(long long lo, long long hi);

    Rng fork(std::uint64_t stream) const;

    std::uint64_t seed() const { return seed_; }

private:
    std::uint64_t seed_ = 0;
    std::array<std::uint64_t, 4> s_{};
};

} // namespace qnk
