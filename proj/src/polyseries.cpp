#include "ehg/polyseries.hpp"

#include <boost/math/special_functions/binomial.hpp>

namespace ehg {

Real frac_part(const Real& x)
{
    Real n = round(x);
    if (abs(x - n) < pole_threshold()) return Real(0);
    Real f = x - floor(x);
    if (f >= 1) f -= 1; // floor rounding edge
    return f;
}

Real vartheta(const Real& x)
{
    Real f = frac_part(x);
    return f * (1 - f);
}

Real bernoulli_number(unsigned n)
{
    if (n == 0) return Real(1);
    if (n == 1) return Real(-1) / 2;
    if (n % 2 == 1) return Real(0);
    return boost::math::bernoulli_b2n<Real>(n / 2);
}

template <typename T>
static T bernoulli_poly_impl(unsigned n, const T& x)
{
    T acc{Real(0)};
    T xp{Real(1)};
    // B_n(x) = sum_k C(n,k) B_{n-k} x^k, accumulated from k = 0 upward.
    for (unsigned k = 0; k <= n; k++) {
        Real c = boost::math::binomial_coefficient<Real>(n, k);
        acc += (c * bernoulli_number(n - k)) * xp;
        xp = xp * x;
    }
    return acc;
}

Real bernoulli_poly(unsigned n, const Real& x)
{
    Cplx r = bernoulli_poly_impl<Cplx>(n, Cplx{x});
    return r.re;
}

Cplx bernoulli_poly(unsigned n, const Cplx& x)
{
    return bernoulli_poly_impl<Cplx>(n, x);
}

std::vector<Cplx> pqr_laurent(const Cplx& x, const std::vector<Cplx>& omega, int order)
{
    const int r = static_cast<int>(omega.size());
    const int len = order + r + 1;
    const Cplx twopii{Real(0), 2 * pi()};

    // Numerator e(x w) = sum (2 pi i x)^k w^k / k!.
    std::vector<Cplx> num(len);
    {
        Cplx t{Real(1)};
        for (int k = 0; k < len; k++) {
            num[k] = t;
            t = t * (twopii * x);
            t = t / Real(k + 1);
        }
    }

    // Denominator prod_i (e(omega_i w) - 1) / w^r, one factor at a time.
    // Each factor (e(a w) - 1)/w has coefficients a_{k+1} = (2 pi i a)^{k+1}/(k+1)!.
    std::vector<Cplx> den(len);
    den[0] = Cplx{Real(1)};
    for (int i = 0; i < r; i++) {
        Cplx a = twopii * omega[i];
        std::vector<Cplx> f(len);
        Cplx t = a;
        for (int k = 0; k < len; k++) {
            f[k] = t;
            t = t * a;
            t = t / Real(k + 2);
        }
        std::vector<Cplx> nd(len);
        for (int k = 0; k < len; k++)
            for (int j = 0; j <= k; j++) nd[k] += den[j] * f[k - j];
        den = std::move(nd);
    }

    // Quotient: phi(w) * w^r = num / den, so P_{k-r} = quo[k].
    std::vector<Cplx> quo(len);
    for (int k = 0; k < len; k++) {
        Cplx s = num[k];
        for (int j = 0; j < k; j++) s -= quo[j] * den[k - j];
        quo[k] = s / den[0];
    }
    return quo;
}

Cplx P_poly(const Cplx& x, const std::vector<Cplx>& omega)
{
    auto v = pqr_laurent(x, omega, 0);
    return v.back();
}

Cplx Q_poly(const Cplx& x, const std::vector<Cplx>& omega)
{
    std::vector<Cplx> w = omega;
    w.push_back(Cplx{Real(-1)});
    return P_poly(x, w);
}

Cplx R_poly(const Cplx& x, const std::vector<Cplx>& omega)
{
    return Q_poly(x, omega) + P_poly(x, omega) * Real(0.5);
}

Cplx P2_closed(const Cplx& x, const Cplx& w1, const Cplx& w2)
{
    Cplx s = x - (w1 + w2) / Real(2);
    return (Real(12) * s * s - w1 * w1 - w2 * w2) / (Real(24) * w1 * w2);
}

Cplx Q2_closed(const Cplx& x, const Cplx& w1, const Cplx& w2)
{
    Cplx s = x - w1 / Real(2) - w2 / Real(2) + Cplx{Real(0.5)};
    return s * (Real(-4) * s * s + w1 * w1 + w2 * w2 + Cplx{Real(1)}) / (Real(24) * w1 * w2);
}

Cplx R2_closed(const Cplx& x, const Cplx& w1, const Cplx& w2)
{
    Cplx s = x - (w1 + w2) / Real(2);
    return s * (Real(-4) * s * s + w1 * w1 + w2 * w2 - Cplx{Real(2)}) / (Real(24) * w1 * w2);
}

} // namespace ehg
