#include "ehg/real.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>

namespace ehg {

static PrecisionContext g_ctx;

PrecisionContext& precision_context() { return g_ctx; }

static unsigned bits_to_digits10(unsigned bits)
{
    // ceil(bits * log10(2)) plus a digit of slack so round trips do not lose
    // the guard bits.
    return static_cast<unsigned>(bits * 0.30103) + 2;
}

void set_working_precision_bits(unsigned bits)
{
    Real::default_precision(bits_to_digits10(bits));
}

void set_working_precision(const PrecisionContext& ctx)
{
    g_ctx = ctx;
    set_working_precision_bits(ctx.total_bits());
}

unsigned working_precision_bits()
{
    return static_cast<unsigned>(Real::default_precision() / 0.30103);
}

Real pi() { return boost::math::constants::pi<Real>(); }
Real log2_const() { return boost::math::constants::ln_two<Real>(); }

Real eps_working()
{
    return ldexp(Real(1), -static_cast<int>(g_ctx.sig_bits));
}

Real pole_threshold()
{
    return ldexp(Real(1), -static_cast<int>(g_ctx.sig_bits / 2));
}

} // namespace ehg

#include "ehg/rng.hpp"

namespace ehg {

// splitmix64-style finalizer over the combined words.
uint64_t CounterRng::mix(uint64_t a, uint64_t b, uint64_t c)
{
    uint64_t z = a * 0x9E3779B97F4A7C15ull + b * 0xBF58476D1CE4E5B9ull +
                 c * 0x94D049BB133111EBull + 0x2545F4914F6CDD1Dull;
    z ^= z >> 30; z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27; z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

} // namespace ehg
