#include "ehg/cplx.hpp"

namespace ehg {

Real cabs(const Cplx& z)
{
    // mpfr has a huge exponent range; the naive formula does not overflow.
    return sqrt(z.re * z.re + z.im * z.im);
}

Real carg(const Cplx& z) { return atan2(z.im, z.re); }

Cplx cexp(const Cplx& z)
{
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Cplx clog(const Cplx& z)
{
    return {log(abs2(z)) / 2, carg(z)};
}

Cplx csqrt(const Cplx& z)
{
    Real r = cabs(z);
    if (r == 0) return {Real(0), Real(0)};
    // Half-angle form, stabilized against cancellation in the small part.
    Real u = sqrt((r + abs(z.re)) / 2);
    Real v = z.im / (2 * u);
    if (z.re >= 0) return {u, v};
    Cplx w = (z.im >= 0) ? Cplx{abs(v), u} : Cplx{abs(v), -u};
    return w;
}

Cplx csin(const Cplx& z)
{
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

Cplx cpow(const Cplx& z, const Real& a)
{
    if (z.re == 0 && z.im == 0) return {Real(0), Real(0)};
    Cplx l = clog(z);
    return cexp({l.re * a, l.im * a});
}

Cplx cpow(const Cplx& z, const Cplx& a)
{
    if (z.re == 0 && z.im == 0) return {Real(0), Real(0)};
    return cexp(clog(z) * a);
}

Cplx cpow_int(const Cplx& z, long n)
{
    if (n < 0) return Cplx{Real(1)} / cpow_int(z, -n);
    Cplx acc{Real(1)}, b = z;
    while (n) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

Cplx e_of(const Cplx& x)
{
    Real t = 2 * pi();
    return cexp({-t * x.im, t * x.re});
}

} // namespace ehg
