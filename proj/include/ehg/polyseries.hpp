// Elementary number-theoretic helpers and the Laurent coefficients of
// phi(w) = e(x w) / prod_i (e(omega_i w) - 1), which drive both the
// hyperbolic gamma counterterms and the correction polynomials P, Q, R.
#ifndef EHG_POLYSERIES_HPP
#define EHG_POLYSERIES_HPP

#include "ehg/cplx.hpp"
#include <vector>

namespace ehg {

// Fractional part in [0,1), with snap-to-integer: inputs within
// 2^-(sig_bits/2) of an integer are treated as that integer.
Real frac_part(const Real& x);

// vartheta(x) = {x}(1 - {x}).
Real vartheta(const Real& x);

// Bernoulli polynomial B_n(x).
Real bernoulli_poly(unsigned n, const Real& x);
Cplx bernoulli_poly(unsigned n, const Cplx& x);
// Bernoulli number B_n (B_1 = -1/2).
Real bernoulli_number(unsigned n);

// Laurent coefficients P^{(r)}_n(x; omega) for n = -r .. order, computed by
// truncated power-series division.  Returned vector v has
// v[k] = P_{k - r}, k = 0 .. order + r.
std::vector<Cplx> pqr_laurent(const Cplx& x, const std::vector<Cplx>& omega, int order);

// P^{(r)}(x; omega) = P^{(r)}_0; Q appends the period -1; R = Q + P/2.
Cplx P_poly(const Cplx& x, const std::vector<Cplx>& omega);
Cplx Q_poly(const Cplx& x, const std::vector<Cplx>& omega);
Cplx R_poly(const Cplx& x, const std::vector<Cplx>& omega);

// Closed forms for r <= 2, used as oracles for the series route.
Cplx P2_closed(const Cplx& x, const Cplx& w1, const Cplx& w2);
Cplx Q2_closed(const Cplx& x, const Cplx& w1, const Cplx& w2);
Cplx R2_closed(const Cplx& x, const Cplx& w1, const Cplx& w2);

} // namespace ehg

#endif
