// Log-scale complex values: a pair (log_abs, arg) representing
// exp(log_abs + i*arg).  Integrands and closed forms in this library involve
// prefactors like e(1/24 v w) whose magnitude overflows any fixed-exponent
// format long before the quantities being compared do, so products and
// quotients are accumulated in log space and only differences are
// exponentiated.  arg is not reduced mod 2 pi by multiplication.
#ifndef EHG_LOGVAL_HPP
#define EHG_LOGVAL_HPP

#include "ehg/cplx.hpp"

namespace ehg {

struct LogC {
    Real log_abs; // -inf encodes an exact zero
    Real arg;

    LogC() : log_abs(0), arg(0) {}
    LogC(Real la, Real a) : log_abs(std::move(la)), arg(std::move(a)) {}

    bool is_zero() const { return isinf(log_abs) && log_abs < 0; }
    // A pole hit is encoded as log_abs = +inf; kernels set it when an
    // argument lands within the pole threshold of a kernel singularity.
    bool is_pole() const { return isinf(log_abs) && log_abs > 0; }
    bool is_finite() const { return !isinf(log_abs) && !isnan(log_abs); }

    static LogC zero();
    static LogC pole();
    static LogC one() { return {Real(0), Real(0)}; }
    static LogC from_cplx(const Cplx& z);
    // exp(l), where l is an ordinary complex logarithm.
    static LogC from_log(const Cplx& l) { return {l.re, l.im}; }

    Cplx to_cplx() const;
    // The complex logarithm this value carries (imaginary part unreduced).
    Cplx log_cplx() const { return {log_abs, arg}; }
};

LogC operator*(const LogC& a, const LogC& b);
LogC operator/(const LogC& a, const LogC& b);
LogC lpow(const LogC& a, const Real& e);
LogC lpow_int(const LogC& a, long n);
// Sum of two log-scale values (used by quadrature accumulation).
LogC ladd(const LogC& a, const LogC& b);

// arg reduced into (-pi, pi].
Real reduce_arg(const Real& a);

// |a/b - 1| computed without leaving log scale until the difference of the
// logs, with the arg difference reduced mod 2 pi.  For b = 0 returns |a|'s
// magnitude scale (inf unless a = 0 as well).
Real rel_diff(const LogC& a, const LogC& b);
// |a - b| in absolute terms, exponentiated at the larger magnitude.
Real abs_diff(const LogC& a, const LogC& b);

} // namespace ehg

#endif
