#include "ehg/asymptotics.hpp"
#include "ehg/gamma.hpp"
#include "ehg/quad.hpp"

#include <cmath>
#include <stdexcept>

namespace ehg {

namespace {

Cplx I() { return iunit(); }

// |d| with the imaginary part reduced into (-pi, pi]; the residuals here are
// differences of logarithms, so they are only defined mod 2 pi i.
Real mod2pi_abs(const Cplx& d) { return cabs(Cplx{d.re, reduce_arg(d.im)}); }

Cplx log_gamma_r(const Cplx& y) { return log_gamma(y) - Cplx{log(2 * pi()) / 2}; }

// min |e(y) - 1| over the circle |y| = rho (the binding boundary of the
// region d(y, Z) >= rho).
Real circle_c(const Real& rho)
{
    Real best(1e9);
    const int N = 720;
    for (int k = 0; k < N; k++) {
        Real phi = 2 * pi() * k / N;
        Cplx y{rho * cos(phi), rho * sin(phi)};
        Real m = cabs(e_of(y) - Cplx{Real(1)});
        if (m < best) best = m;
    }
    return best;
}

LogC log_e_of(const Cplx& x) // LogC form of e(x), exact in the exponent
{
    return LogC::from_log(Cplx{-2 * pi() * x.im, 2 * pi() * x.re});
}

struct CaseParams {
    std::vector<Cplx> omega;
    Cplx x, alpha, beta;
};

// Shared generic parameter points; individual cases override below.
const double kAlpha = 0.3, kBeta = -0.2;

Real residual_at(EstimateCase c, const Real& v)
{
    const Cplx i1 = I();
    switch (c) {
    case EstimateCase::HYPERB_ASYMPT_BOUND: {
        // Contour integral of phi^{(2)}(w;x;omega) dw/w along Im w = a
        // against the explicit bound; residual is the ratio (must be <= 1).
        std::vector<Cplx> omega = {i1, Cplx{Real(1), Real(2)}};
        Real a = Real(0.6), eps = Real(0.2);
        Cplx x{Real(1 / v), Real(0.4)};
        Integrand f = [&](const std::vector<Cplx>& pts) {
            const Cplx& w = pts[0];
            Cplx den = w;
            for (auto& om : omega) den *= e_of(w * om) - Cplx{Real(1)};
            return LogC::from_cplx(e_of(w * x) / den);
        };
        QuadResult qr = line_quad(f, 1, Real(0.02), Real(45), a, 2 * pi() * Real(0.4));
        Real integral = qr.value.is_zero() ? Real(0) : exp(qr.value.log_abs);
        Cplx ws{Real(0)};
        for (auto& om : omega) ws += om;
        Real bound = 1 / a;
        for (auto& om : omega) bound /= circle_c(eps * cabs(om));
        bound *= exp(-2 * pi() * a * x.re) / (2 * pi() * x.im) +
                 exp(-2 * pi() * a * (x.re - ws.re)) / (2 * pi() * (ws.im - x.im));
        return integral / bound;
    }
    case EstimateCase::RESIDUE_SUM: {
        std::vector<Cplx> omega = {i1, Cplx{Real(1), Real(2)}};
        Real a = Real(1.1);
        Cplx x{Real(1 / v), Real(0)};
        Cplx lg = gamma_h_log(x, omega).log_cplx();
        Cplx P = P_poly(x, omega);
        Cplx T{Real(0)};
        for (size_t i = 0; i < omega.size(); i++) {
            Real step = (Cplx{Real(-1)} / omega[i]).im; // pole height spacing
            for (int k = 1; Real(k) * step <= a; k++) {
                Cplx num = e_of(Cplx{Real(-k)} * x / omega[i]);
                Cplx den{Real(-k)};
                for (size_t j = 0; j < omega.size(); j++) {
                    if (j == i) continue;
                    den *= e_of(Cplx{Real(-k)} * omega[j] / omega[i]) - Cplx{Real(1)};
                }
                T += num / den;
            }
        }
        return mod2pi_abs(Cplx{Real(0)} - i1 * pi() * P - T + lg);
    }
    case EstimateCase::HYPERB_ASYMPT: {
        std::vector<Cplx> omega = {i1, Cplx{Real(1), Real(1)}};
        Cplx x = e_of(Cplx{Real(1) / 16}) * Cplx{Real(1 / v)};
        Cplx lg = gamma_h_log(x, omega).log_cplx();
        return mod2pi_abs(lg - i1 * pi() * P_poly(x, omega));
    }
    case EstimateCase::XBIG_VSMALL: {
        Cplx w1 = i1, w2{Real(1), Real(1)};
        Cplx x{Real(0.4), Real(0.3)}, al{Real(kAlpha)}, be{Real(kBeta)};
        std::vector<Cplx> per = {w1, Cplx{v} * w2};
        auto gam2 = [&](const Cplx& y) {
            return gamma_h_log(y, per).log_cplx() - i1 * pi() * P_poly(y, per);
        };
        std::vector<Cplx> p1 = {w1};
        Cplx gam1 = gamma_h_log(x, p1).log_cplx() - i1 * pi() * P_poly(x, p1);
        return mod2pi_abs(gam2(x + Cplx{v} * al * w2) - gam2(x + Cplx{v} * be * w2) -
                          (al - be) * gam1);
    }
    case EstimateCase::HYPER_TO_RAT_COR: {
        Cplx w1 = i1, w2{Real(1), Real(1)};
        Cplx x{Real(0.4), Real(0.3)}, al{Real(kAlpha)}, be{Real(kBeta)};
        std::vector<Cplx> per = {w1, Cplx{v} * w2};
        Cplx la = gamma_h_log(x + Cplx{v} * al * w2, per).log_cplx();
        Cplx lb = gamma_h_log(x + Cplx{v} * be * w2, per).log_cplx();
        Cplx l1 = gamma_h_log(x, {w1}).log_cplx();
        return mod2pi_abs(la - lb - (al - be) * l1);
    }
    case EstimateCase::STIRLING: {
        Cplx x = e_of(Cplx{Real(1) / 6}) * Cplx{Real(1 / v)};
        return mod2pi_abs(log_gamma(x) - log_gamma_stirling(x, 2));
    }
    case EstimateCase::GAMMA_RATIO_COR: {
        Cplx w{Real(1), Real(1)};
        Cplx x{Real(1.3), Real(0.4)}, al{Real(kAlpha)}, be{Real(kBeta)};
        Cplx vw = Cplx{v} * w;
        Cplx la = log_gamma_r((x + vw * al) / vw);
        Cplx lb = log_gamma_r((x + vw * be) / vw);
        // B_2(a) - B_2(b) = (a-b)(a+b-1); keeping the i=2 series term
        // leaves an O(v^2) remainder.
        Cplx b2 = (al - be) * (al + be - Cplx{Real(1)});
        return mod2pi_abs(la - lb - (al - be) * clog(x / vw) -
                          b2 * vw / (Real(2) * x));
    }
    case EstimateCase::HYPER_TO_RAT: {
        Cplx w1 = i1, w2{Real(1), Real(1)};
        Cplx x{Real(0.4), Real(0.3)}, al{Real(kAlpha)}, be{Real(kBeta)};
        Cplx vw = Cplx{v} * w2;
        std::vector<Cplx> per = {w1, vw};
        Cplx lha = gamma_h_log(x + vw * al, per).log_cplx();
        Cplx lhb = gamma_h_log(x + vw * be, per).log_cplx();
        Cplx lra = log_gamma_r((x + vw * al) / vw);
        Cplx lrb = log_gamma_r((x + vw * be) / vw);
        Cplx l1 = gamma_h_log(x, {w1}).log_cplx();
        return mod2pi_abs(lha - lhb - (lra - lrb) - (al - be) * (l1 - clog(x / vw)));
    }
    case EstimateCase::HYPER_TO_RAT2: {
        Cplx w1 = i1, w2 = i1; // proportional periods: quadrature route
        Cplx al{Real(0.6)};   // alpha = 1 would make the identity exact
        Cplx vw2 = Cplx{v} * w2;
        Cplx lh = gamma_h_log(vw2 * al, {w1, vw2}).log_cplx();
        Cplx lr = log_gamma_r(al);
        return mod2pi_abs(lh - lr -
                          (al - Cplx{Real(0.5)}) * clog(Cplx{Real(2 * pi())} * vw2 / w1));
    }
    case EstimateCase::ELL_TO_HYPER1: {
        std::vector<Cplx> omega = {i1, Cplx{Real(1), Real(2)}};
        Cplx x{Real(0.5)};
        std::vector<Cplx> vo, pv;
        for (auto& om : omega) {
            vo.push_back(Cplx{v} * om);
            pv.push_back(e_of(Cplx{v} * om));
        }
        Cplx lge = gamma_e_log(e_of(x), pv).log_cplx();
        // e(x) is 1-periodic but Q is not; the decaying combination on
        // this x-range uses Q at x-1 (equivalently Q + P).
        Cplx q = Q_poly(x - Cplx{Real(1)}, vo);
        return mod2pi_abs(lge - Cplx{Real(2 * pi())} * i1 * q);
    }
    case EstimateCase::ELL_TO_HYPER2: {
        std::vector<Cplx> omega = {i1, Cplx{Real(1), Real(2)}};
        Cplx x{Real(0.3), Real(0.05)};
        std::vector<Cplx> vo, pv;
        for (auto& om : omega) {
            vo.push_back(Cplx{v} * om);
            pv.push_back(e_of(Cplx{v} * om));
        }
        Cplx lge = gamma_e_log(e_of(x), pv).log_cplx();
        Cplx lgh = gamma_h_log(x, vo).log_cplx();
        return mod2pi_abs(lge - lgh - Cplx{Real(2 * pi())} * i1 * R_poly(x, vo));
    }
    case EstimateCase::ELL_BOUND_HYPER: {
        std::vector<Cplx> omega = {i1, Cplx{Real(1), Real(2)}};
        std::vector<Cplx> vo, pv;
        for (auto& om : omega) {
            vo.push_back(Cplx{v} * om);
            pv.push_back(e_of(Cplx{v} * om));
        }
        Real worst(0);
        for (int k = 0; k < 10; k++) {
            Cplx xg{Real(-0.95) + Real(0.1) * k};
            LogC ge = gamma_e_log(e_of(xg), pv);
            Real lq = 2 * pi() * Q_poly(xg, vo).im; // log |e(-Q)|
            Real r1 = exp(ge.log_abs + lq);
            Real r2 = exp(-ge.log_abs - lq);
            worst = std::max(worst, std::max(r1, r2));
        }
        // theta-function variant with a shifted argument.
        Cplx mu{Real(0.3), Real(0.2)};
        Cplx vmu = Cplx{v} * mu;
        for (int k = 0; k < 10; k++) {
            Cplx xg{Real(-0.95) + Real(0.1) * k};
            LogC th = theta_log(e_of(vmu + xg), pv[0]);
            Real lhs = th.log_abs + 2 * pi() * R_poly(vmu, {vo[0]}).im;
            Real rhs = -2 * pi() * (Cplx{vartheta(xg.re)} / (Cplx{Real(2)} * vo[0])).im;
            worst = std::max(worst, Real(exp(lhs - rhs)));
        }
        return worst;
    }
    case EstimateCase::ELL_TO_RAT1: {
        Cplx p{Real(0.25)}, w{Real(1), Real(1)};
        Cplx x{Real(0.3)}, al{Real(kAlpha)}, be{Real(kBeta)};
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Cplx lea = gamma_e_log(e_of(x + vw * al), {p, q}).log_cplx();
        Cplx leb = gamma_e_log(e_of(x + vw * be), {p, q}).log_cplx();
        Cplx lra = log_gamma_r((x + vw * al) / vw);
        Cplx lrb = log_gamma_r((x + vw * be) / vw);
        Cplx lth = theta_log(e_of(x), p).log_cplx();
        return mod2pi_abs(lea - leb - (lra - lrb) - (al - be) * (lth - clog(x / vw)));
    }
    case EstimateCase::ELL_TO_RAT2: {
        Cplx p{Real(0.25)}, w{Real(1), Real(1)}, al{Real(0.7)};
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Cplx lge = gamma_e_log(e_of(vw * al), {p, q}).log_cplx();
        Cplx pp{Real(exp(qpoch_log(p, p).log_abs))}; // (p;p)_inf, real positive
        Cplx lead = i1 * pi() / (Cplx{Real(12)} * vw);
        Cplx lg = clog(Cplx{Real(2 * pi())} * vw * pp * pp / i1);
        return mod2pi_abs(lge - log_gamma_r(al) - lead - (al - Cplx{Real(0.5)}) * lg);
    }
    case EstimateCase::ELL_TO_RAT3: {
        Cplx p{Real(0.25)}, w{Real(1), Real(1)}, z{Real(0.7)};
        Real al(kAlpha), be(kBeta);
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        LogC num = gamma_e_log(e_of(vw * Cplx{al}) * z, {p, q});
        LogC den = gamma_e_log(e_of(vw * Cplx{be}) * z, {p, q});
        LogC rhs = lpow(theta_log(z, p), al - be);
        return rel_diff(num / den, rhs);
    }
    case EstimateCase::ELL_BOUND_RAT: {
        Cplx p{Real(0.25)}, w{Real(1), Real(1)};
        Real al(kAlpha), be(kBeta);
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Real worst(0);
        for (double zd : {0.3, 0.5, 0.7, 0.9}) {
            Cplx z{Real(zd)};
            LogC num = gamma_e_log(e_of(vw * Cplx{Real(al)}) * z, {p, q});
            LogC den = gamma_e_log(e_of(vw * Cplx{Real(be)}) * z, {p, q});
            worst = std::max(worst, Real(exp(num.log_abs - den.log_abs)));
        }
        return worst;
    }
    case EstimateCase::TRIG_TO_RAT0: {
        Cplx w{Real(1), Real(1)}, z{Real(0.6)}, al{Real(kAlpha)}, be{Real(kBeta)};
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Cplx la = gamma_t_log(e_of(vw * al) * z, q).log_cplx();
        Cplx lb = gamma_t_log(e_of(vw * be) * z, q).log_cplx();
        return mod2pi_abs(la - lb - (al - be) * clog(Cplx{Real(1)} - z));
    }
    case EstimateCase::TRIG_THEOREM: {
        Cplx p{Real(0.25)}, w{Real(1), Real(1)}, z{Real(0.7)};
        Cplx al{Real(kAlpha)}, be{Real(kBeta)};
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Cplx lea = gamma_e_log(e_of(vw * al) * z, {p, q}).log_cplx();
        Cplx leb = gamma_e_log(e_of(vw * be) * z, {p, q}).log_cplx();
        Cplx lta = gamma_t_log(e_of(vw * al) * z, q).log_cplx();
        Cplx ltb = gamma_t_log(e_of(vw * be) * z, q).log_cplx();
        Cplx lth = theta_log(z, p).log_cplx();
        return mod2pi_abs(lea - leb - (lta - ltb) -
                          (al - be) * (lth - clog(Cplx{Real(1)} - z)));
    }
    case EstimateCase::TRIG_TO_RAT: {
        Cplx w{Real(1), Real(1)}, x{Real(0.3)}, al{Real(kAlpha)}, be{Real(kBeta)};
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Cplx la = gamma_t_log(e_of(x + vw * al), q).log_cplx();
        Cplx lb = gamma_t_log(e_of(x + vw * be), q).log_cplx();
        Cplx lra = log_gamma_r((x + vw * al) / vw);
        Cplx lrb = log_gamma_r((x + vw * be) / vw);
        return mod2pi_abs(la - lb - (lra - lrb) -
                          (al - be) * (clog(Cplx{Real(1)} - e_of(x)) - clog(x / vw)));
    }
    case EstimateCase::KOORNWINDER: {
        Cplx w{Real(1), Real(1)}, al{Real(0.7)};
        Cplx vw = Cplx{v} * w, q = e_of(vw);
        Cplx lt = gamma_t_log(e_of(vw * al), q).log_cplx();
        Cplx lead = i1 * pi() / (Cplx{Real(12)} * vw);
        return mod2pi_abs(lt - log_gamma_r(al) - lead -
                          (al - Cplx{Real(0.5)}) * clog(Cplx{Real(2 * pi())} * vw / i1));
    }
    }
    throw std::logic_error("residual_at: bad case");
}

DecayModel case_model(EstimateCase c)
{
    switch (c) {
    case EstimateCase::HYPERB_ASYMPT_BOUND:
    case EstimateCase::ELL_BOUND_HYPER:
    case EstimateCase::ELL_BOUND_RAT: return DecayModel::BOUNDED;
    case EstimateCase::RESIDUE_SUM:
    case EstimateCase::HYPERB_ASYMPT:
    case EstimateCase::ELL_TO_HYPER1:
    case EstimateCase::ELL_TO_HYPER2: return DecayModel::EXP_DECAY;
    case EstimateCase::STIRLING:
    case EstimateCase::GAMMA_RATIO_COR: return DecayModel::POWER_O_VM;
    default: return DecayModel::LINEAR_O_V;
    }
}

// Predicted constant: decay rate per 1/v for EXP_DECAY (2 pi a, 2 pi A),
// exponent for POWER_O_VM; 0 when the statement names none.
Real case_expected_rate(EstimateCase c)
{
    auto dir_min = [](const Cplx& dir, const std::vector<Cplx>& omega) {
        Real m(1e9);
        for (auto& om : omega) m = std::min(m, ((Cplx{Real(0)} - dir) / om).im);
        return m;
    };
    switch (c) {
    case EstimateCase::RESIDUE_SUM: return 2 * pi() * Real(1.1);
    case EstimateCase::HYPERB_ASYMPT: {
        std::vector<Cplx> omega = {I(), Cplx{Real(1), Real(1)}};
        return 2 * pi() * dir_min(e_of(Cplx{Real(1) / 16}), omega);
    }
    case EstimateCase::ELL_TO_HYPER1: {
        std::vector<Cplx> omega = {I(), Cplx{Real(1), Real(2)}};
        Cplx x{Real(0.5)};
        Real A(1e9);
        for (auto& om : omega) {
            A = std::min(A, ((Cplx{Real(0)} - x) / om).im);
            A = std::min(A, ((x - Cplx{Real(1)}) / om).im);
        }
        return 2 * pi() * A;
    }
    case EstimateCase::ELL_TO_HYPER2: {
        std::vector<Cplx> omega = {I(), Cplx{Real(1), Real(2)}};
        Cplx x{Real(0.3), Real(0.05)};
        Real A(1e9);
        for (auto& om : omega)
            A = std::min(A, (Cplx{Real(-1)} / om).im - abs((x / om).im));
        return 2 * pi() * A;
    }
    case EstimateCase::STIRLING: return Real(5); // 2 correction terms kept
    case EstimateCase::GAMMA_RATIO_COR: return Real(2);
    default: return Real(0);
    }
}

} // namespace

const char* case_name(EstimateCase c)
{
    switch (c) {
    case EstimateCase::HYPERB_ASYMPT_BOUND: return "hyperb_asympt_bound";
    case EstimateCase::RESIDUE_SUM: return "residue_sum";
    case EstimateCase::HYPERB_ASYMPT: return "hyperb_asympt";
    case EstimateCase::XBIG_VSMALL: return "xbig_vsmall";
    case EstimateCase::HYPER_TO_RAT_COR: return "hyper_to_rat_cor";
    case EstimateCase::STIRLING: return "stirling";
    case EstimateCase::GAMMA_RATIO_COR: return "gamma_ratio_cor";
    case EstimateCase::HYPER_TO_RAT: return "hyper_to_rat";
    case EstimateCase::HYPER_TO_RAT2: return "hyper_to_rat2";
    case EstimateCase::ELL_TO_HYPER1: return "ell_to_hyper1";
    case EstimateCase::ELL_TO_HYPER2: return "ell_to_hyper2";
    case EstimateCase::ELL_BOUND_HYPER: return "ell_bound_hyper";
    case EstimateCase::ELL_TO_RAT1: return "ell_to_rat1";
    case EstimateCase::ELL_TO_RAT2: return "ell_to_rat2";
    case EstimateCase::ELL_TO_RAT3: return "ell_to_rat3";
    case EstimateCase::ELL_BOUND_RAT: return "ell_bound_rat";
    case EstimateCase::TRIG_TO_RAT0: return "trig_to_rat0";
    case EstimateCase::TRIG_THEOREM: return "trig_theorem";
    case EstimateCase::TRIG_TO_RAT: return "trig_to_rat";
    case EstimateCase::KOORNWINDER: return "koornwinder";
    }
    return "?";
}

std::vector<EstimateCase> estimate_catalog()
{
    using E = EstimateCase;
    return {E::HYPERB_ASYMPT_BOUND, E::RESIDUE_SUM,  E::HYPERB_ASYMPT,
            E::XBIG_VSMALL,         E::HYPER_TO_RAT_COR, E::STIRLING,
            E::GAMMA_RATIO_COR,     E::HYPER_TO_RAT, E::HYPER_TO_RAT2,
            E::ELL_TO_HYPER1,       E::ELL_TO_HYPER2, E::ELL_BOUND_HYPER,
            E::ELL_TO_RAT1,         E::ELL_TO_RAT2,  E::ELL_TO_RAT3,
            E::ELL_BOUND_RAT,       E::TRIG_TO_RAT0, E::TRIG_THEOREM,
            E::TRIG_TO_RAT,         E::KOORNWINDER};
}

std::vector<Real> default_schedule(EstimateCase c)
{
    auto inv = [](std::initializer_list<double> ts) {
        std::vector<Real> s;
        for (double t : ts) s.push_back(1 / Real(t));
        return s;
    };
    switch (c) {
    case EstimateCase::HYPERB_ASYMPT_BOUND: return inv({1, 1.5, 2, 2.5});
    case EstimateCase::RESIDUE_SUM: return inv({1.5, 2, 2.5, 3});
    case EstimateCase::HYPERB_ASYMPT: return inv({4, 6, 8, 10});
    case EstimateCase::STIRLING: return inv({4, 6, 8, 10, 14});
    default: {
        std::vector<Real> s;
        for (double v : {0.4, 0.3, 0.2, 0.15, 0.1, 0.07, 0.05}) s.push_back(Real(v));
        return s;
    }
    }
}

FitResult fit_decay(const std::vector<EstimateRow>& rows, DecayModel model)
{
    Real floor = eps_working() * 100;
    std::vector<Real> u, y;
    for (auto& r : rows) {
        if (!(r.residual > floor) || isinf(r.residual)) continue;
        u.push_back(model == DecayModel::EXP_DECAY ? Real(1 / r.v) : Real(log(r.v)));
        y.push_back(log(r.residual));
    }
    FitResult fr;
    size_t n = u.size();
    if (n < 3) return fr;
    Real su(0), sy(0);
    for (size_t k = 0; k < n; k++) { su += u[k]; sy += y[k]; }
    Real mu = su / n, my = sy / n, sxx(0), sxy(0);
    for (size_t k = 0; k < n; k++) {
        sxx += (u[k] - mu) * (u[k] - mu);
        sxy += (u[k] - mu) * (y[k] - my);
    }
    Real slope = sxy / sxx;
    Real ss(0), ymin = y[0], ymax = y[0];
    for (size_t k = 0; k < n; k++) {
        Real e = y[k] - my - slope * (u[k] - mu);
        ss += e * e;
        ymin = std::min(ymin, y[k]);
        ymax = std::max(ymax, y[k]);
    }
    Real range = std::max(Real(ymax - ymin), Real(1));
    fr.fit_residual = sqrt(ss / n) / range;
    fr.rate = model == DecayModel::EXP_DECAY ? Real(-slope) : slope;
    return fr;
}

ConvergenceReport run_case(EstimateCase c, const std::vector<Real>& schedule)
{
    ConvergenceReport rep;
    rep.case_id = c;
    rep.name = case_name(c);
    rep.model = case_model(c);
    rep.expected_rate = case_expected_rate(c);
    std::vector<Real> sched = schedule.empty() ? default_schedule(c) : schedule;
    try {
        for (auto& v : sched) rep.rows.push_back({v, residual_at(c, v)});
    } catch (const std::exception& e) {
        rep.passed = false;
        rep.detail = std::string("evaluation failed: ") + e.what();
        return rep;
    }
    FitResult fr = fit_decay(rep.rows, rep.model);
    rep.rate = fr.rate;
    rep.fit_residual = fr.fit_residual;
    switch (rep.model) {
    case DecayModel::EXP_DECAY:
        rep.passed = fr.rate > 0 && fr.fit_residual < Real(0.15);
        if (rep.passed && rep.expected_rate > 0)
            rep.passed = abs(fr.rate - rep.expected_rate) <= Real(0.30) * rep.expected_rate;
        break;
    case DecayModel::LINEAR_O_V:
        // O(v) is an upper bound; faster decay still satisfies it.
        rep.passed = fr.rate >= Real(0.5) && fr.rate <= Real(3.0) &&
                     fr.fit_residual < Real(0.15);
        break;
    case DecayModel::POWER_O_VM:
        rep.passed = fr.fit_residual < Real(0.15) &&
                     abs(fr.rate - rep.expected_rate) <= Real(0.30) * rep.expected_rate;
        break;
    case DecayModel::BOUNDED: {
        rep.passed = fr.rate >= Real(-0.1) || rep.rows.size() < 3;
        if (c == EstimateCase::HYPERB_ASYMPT_BOUND)
            for (auto& r : rep.rows)
                if (r.residual > 1) rep.passed = false;
        break;
    }
    }
    return rep;
}

} // namespace ehg
