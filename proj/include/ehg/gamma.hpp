// Gamma-function kernels: q-Pochhammer symbols, theta functions, and the
// trigonometric / elliptic / hyperbolic / rational gamma hierarchy.
//
// Conventions:
//   (z;q)_inf  = prod_{k>=0} (1 - q^k z),  |q| < 1
//   theta(z;p) = (z;p)_inf (p/z;p)_inf
//   gamma_t(z;q) = 1/(z;q)_inf
//   gamma_e^{(r)}(z;p_1..p_r) =
//     prod (1 - p^{k+1}.../z) (1 - p^k... z)^{(-1)^{r-1}}   (r = 1 is theta)
//   gamma_h^{(r)}(x;omega) = exp(PV int_R e(xw) / prod(e(omega_i w)-1) dw/w),
//     defined for 0 < Im(x) < Im(sum omega), continued by the shift equation
//   gamma_r(x;omega) = Gamma(x/omega)/sqrt(2 pi)
//
// gamma_h has two independent routes: a residue/product expansion (fast, the
// default when the periods are not proportional) and direct quadrature of
// the defining integral (reference; carries a truncation certificate).
#ifndef EHG_GAMMA_HPP
#define EHG_GAMMA_HPP

#include "ehg/logval.hpp"
#include "ehg/polyseries.hpp"
#include <vector>

namespace ehg {

struct TruncationCertificate {
    Real w0 = Real(0);          // Taylor patch endpoint
    Real W = Real(0);           // quadrature truncation point actually used
    int n_panels = 0;
    int nodes_per_panel = 0;
    int patch_order = 0;
    Real tail_bound = Real(0);  // bound on the discarded exponential tail
};

// log (z;q)_inf.  Direct factors are peeled off until |q^k z| <= 1/2, then
// the series -sum_m w^m/(m(1-q^m)) finishes the job.  Returns zero() if some
// factor vanishes to within the pole threshold.
LogC qpoch_log(const Cplx& z, const Cplx& q);
// Pure series route, valid for |z| < 1; kept as an oracle for the hybrid.
LogC qpoch_log_series(const Cplx& z, const Cplx& q);
// Finite product (z;q)_n.
LogC qpoch_log_finite(const Cplx& z, const Cplx& q, long n);

LogC theta_log(const Cplx& z, const Cplx& p);
LogC gamma_t_log(const Cplx& z, const Cplx& q);

// r = ps.size() <= 3.
LogC gamma_e_log(const Cplx& z, const std::vector<Cplx>& ps);
// Log-series branch, valid on |p_1...p_r| < |z| < 1; oracle for the product
// route and the branch used by the Narukawa cross-check.
LogC gamma_e_log_series(const Cplx& z, const std::vector<Cplx>& ps);

// r = omega.size() <= 3; x reduced into the defining strip by the shift
// equation (at most max_shift steps each way).
LogC gamma_h_log(const Cplx& x, const std::vector<Cplx>& omega);
// Quadrature of the defining integral (in-strip x only).
LogC gamma_h_log_integral(const Cplx& x, const std::vector<Cplx>& omega,
                          TruncationCertificate* cert = nullptr);
// Residue/product route (in-strip x, non-proportional periods).
LogC gamma_h_log_product(const Cplx& x, const std::vector<Cplx>& omega);

LogC gamma_r_log(const Cplx& x, const Cplx& omega);
// Truncated Stirling series with m correction terms, no argument raising;
// used by the asymptotics suite to measure the series remainder.
Cplx log_gamma_stirling(const Cplx& z, int m);
// log Gamma(z), principal-style branch continuous from the positive axis.
Cplx log_gamma(const Cplx& z);

// |LHS - RHS| of the product expansion relating the elliptic and hyperbolic
// gamma functions, truncated at K terms per sum; arg difference reduced
// mod 2 pi (branch data is out of scope).
Real narukawa_crosscheck(const Cplx& x, const std::vector<Cplx>& omega, int K);

// Number of shift-equation steps allowed when reducing x into the strip.
constexpr int kMaxShift = 32;

} // namespace ehg

#endif
