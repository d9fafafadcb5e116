// Complex arithmetic over the working-precision reals.  std::complex is not
// usable with a variable-precision backend and the sandbox lacks libmpc
// headers, so the handful of operations we need live here.  Logs and powers
// are on the principal branch (cut along the negative real axis); square
// roots take positive real part.
#ifndef EHG_CPLX_HPP
#define EHG_CPLX_HPP

#include "ehg/real.hpp"

namespace ehg {

struct Cplx {
    Real re, im;
    Cplx() : re(0), im(0) {}
    Cplx(Real r) : re(std::move(r)), im(0) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Cplx(int r) : re(r), im(0) {}
    Cplx(double r) : re(r), im(0) {}
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
inline Cplx operator*(const Cplx& a, const Cplx& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator*(const Real& a, const Cplx& b) { return {a * b.re, a * b.im}; }
inline Cplx operator*(const Cplx& a, const Real& b) { return {a.re * b, a.im * b}; }
inline Cplx operator/(const Cplx& a, const Real& b) { return {a.re / b, a.im / b}; }
inline Cplx operator/(const Cplx& a, const Cplx& b)
{
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline Cplx& operator+=(Cplx& a, const Cplx& b) { a.re += b.re; a.im += b.im; return a; }
inline Cplx& operator-=(Cplx& a, const Cplx& b) { a.re -= b.re; a.im -= b.im; return a; }
inline Cplx& operator*=(Cplx& a, const Cplx& b) { a = a * b; return a; }

inline Cplx conj(const Cplx& z) { return {z.re, -z.im}; }
inline Real abs2(const Cplx& z) { return z.re * z.re + z.im * z.im; }

Real cabs(const Cplx& z);
Real carg(const Cplx& z);
Cplx cexp(const Cplx& z);
Cplx clog(const Cplx& z);  // principal branch
Cplx csqrt(const Cplx& z); // positive real part
Cplx csin(const Cplx& z);
Cplx cpow(const Cplx& z, const Real& a);   // principal
Cplx cpow_int(const Cplx& z, long n);
Cplx cpow(const Cplx& z, const Cplx& a);   // principal

// sqrt(-1) with positive imaginary part.
inline Cplx iunit() { return {Real(0), Real(1)}; }

// e(x) = exp(2 pi sqrt(-1) x).
Cplx e_of(const Cplx& x);

} // namespace ehg

#endif
