#include "ehg/logval.hpp"

namespace ehg {

LogC LogC::zero()
{
    Real ninf(0);
    ninf = -std::numeric_limits<Real>::infinity();
    return {ninf, Real(0)};
}

LogC LogC::pole()
{
    Real pinf(0);
    pinf = std::numeric_limits<Real>::infinity();
    return {pinf, Real(0)};
}

LogC LogC::from_cplx(const Cplx& z)
{
    if (z.re == 0 && z.im == 0) return zero();
    return {log(abs2(z)) / 2, carg(z)};
}

Cplx LogC::to_cplx() const
{
    if (is_zero()) return {Real(0), Real(0)};
    Real m = exp(log_abs);
    return {m * cos(arg), m * sin(arg)};
}

LogC operator*(const LogC& a, const LogC& b)
{
    if (a.is_pole() || b.is_pole()) return LogC::pole();
    if (a.is_zero() || b.is_zero()) return LogC::zero();
    return {a.log_abs + b.log_abs, a.arg + b.arg};
}

LogC operator/(const LogC& a, const LogC& b)
{
    if (b.is_zero() || a.is_pole()) return LogC::pole();
    if (a.is_zero() || b.is_pole()) return LogC::zero();
    return {a.log_abs - b.log_abs, a.arg - b.arg};
}

LogC lpow(const LogC& a, const Real& e)
{
    if (a.is_zero()) return LogC::zero();
    return {a.log_abs * e, a.arg * e};
}

LogC lpow_int(const LogC& a, long n)
{
    if (a.is_zero()) return LogC::zero();
    return {a.log_abs * n, a.arg * n};
}

LogC ladd(const LogC& a, const LogC& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // Exponentiate the smaller term relative to the larger.
    const LogC& big = (a.log_abs >= b.log_abs) ? a : b;
    const LogC& sml = (a.log_abs >= b.log_abs) ? b : a;
    Real dm = exp(sml.log_abs - big.log_abs);
    Real da = sml.arg - big.arg;
    Cplx s{1 + dm * cos(da), dm * sin(da)};
    if (s.re == 0 && s.im == 0) return LogC::zero();
    return {big.log_abs + log(abs2(s)) / 2, big.arg + carg(s)};
}

Real reduce_arg(const Real& a)
{
    Real two_pi = 2 * pi();
    Real r = fmod(a, two_pi);
    if (r > pi()) r -= two_pi;
    if (r <= -pi()) r += two_pi;
    return r;
}

Real rel_diff(const LogC& a, const LogC& b)
{
    if (b.is_zero()) return a.is_zero() ? Real(0) : std::numeric_limits<Real>::infinity();
    if (a.is_zero()) return Real(1);
    Real dl = a.log_abs - b.log_abs;
    Real da = reduce_arg(a.arg - b.arg);
    // |exp(dl + i da) - 1|
    Real m = exp(dl);
    Cplx d{m * cos(da) - 1, m * sin(da)};
    return cabs(d);
}

Real abs_diff(const LogC& a, const LogC& b)
{
    if (b.is_zero()) return a.is_zero() ? Real(0) : exp(a.log_abs);
    if (a.is_zero()) return exp(b.log_abs);
    const LogC& big = (a.log_abs >= b.log_abs) ? a : b;
    const LogC& sml = (a.log_abs >= b.log_abs) ? b : a;
    Real m = exp(sml.log_abs - big.log_abs);
    Real da = reduce_arg(sml.arg - big.arg);
    Cplx d{1 - m * cos(da), -m * sin(da)};
    return exp(big.log_abs) * cabs(d);
}

} // namespace ehg
