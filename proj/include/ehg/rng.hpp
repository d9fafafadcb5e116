// Counter-based deterministic random numbers: value = mix(seed, stream,
// counter).  Trial k of job j always sees the same draws, independent of
// evaluation order or thread count.
#ifndef EHG_RNG_HPP
#define EHG_RNG_HPP

#include "ehg/real.hpp"
#include <cstdint>

namespace ehg {

struct CounterRng {
    uint64_t seed;
    uint64_t stream;
    uint64_t counter = 0;

    CounterRng(uint64_t seed_, uint64_t stream_) : seed(seed_), stream(stream_) {}

    static uint64_t mix(uint64_t a, uint64_t b, uint64_t c);

    uint64_t next_u64() { return mix(seed, stream, counter++); }
    // Uniform in [0,1) with 53 bits.
    double next_unit() { return (next_u64() >> 11) * (1.0 / 9007199254740992.0); }
    // Uniform in [lo, hi).
    Real next_real(const Real& lo, const Real& hi)
    {
        return lo + (hi - lo) * Real(next_unit());
    }
    long next_long(long lo, long hi) // inclusive bounds
    {
        return lo + static_cast<long>(next_u64() % static_cast<uint64_t>(hi - lo + 1));
    }
};

} // namespace ehg

#endif
