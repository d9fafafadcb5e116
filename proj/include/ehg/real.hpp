// Working-precision real arithmetic.  All numerics in this library run on
// mpfr-backed floats whose precision is set at run time; the convention is
// significand bits plus guard bits, with the mpfr precision being the sum.
#ifndef EHG_REAL_HPP
#define EHG_REAL_HPP

#include <boost/multiprecision/mpfr.hpp>

namespace ehg {

using Real = boost::multiprecision::mpfr_float;

struct PrecisionContext {
    unsigned sig_bits = 128;
    unsigned guard_bits = 16;
    unsigned total_bits() const { return sig_bits + guard_bits; }
};

// Sets the default mpfr precision for the calling thread.  Inside OpenMP
// regions every thread must call this on entry, since fresh threads start
// with the library default.
void set_working_precision(const PrecisionContext& ctx);
void set_working_precision_bits(unsigned bits);
unsigned working_precision_bits();

// Current precision context (process-wide; the harness sets it per run).
PrecisionContext& precision_context();

Real pi();
Real log2_const();
// 2^-sig_bits under the current context.
Real eps_working();
// Threshold below which a value is treated as hitting a pole or zero of a
// kernel function: 2^-(sig_bits/2).
Real pole_threshold();

} // namespace ehg

#endif
