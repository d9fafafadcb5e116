// Integral catalog: integrand builders for every family and level, the
// quadrature drivers, closed-form products, transformation pairs, and limit
// pairs with their prefactors.
#include "ehg/integrals.hpp"
#include "ehg/gamma.hpp"
#include "ehg/polyseries.hpp"
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace ehg {

namespace {

Real lfact(int n)
{
    Real s(0);
    for (int k = 2; k <= n; ++k) s += log(Real(k));
    return s;
}

LogC lconst(const Real& log_abs) { return LogC{log_abs, Real(0)}; }

// e(x) = exp(2 pi i x) in log scale.
LogC le(const Cplx& x)
{
    return LogC{Real(-2) * pi() * x.im, Real(2) * pi() * x.re};
}

// a^kappa on the principal branch of log a.
LogC lpow_c(const LogC& a, const Cplx& kappa)
{
    Cplx l{a.log_abs, reduce_arg(a.arg)};
    return LogC::from_log(kappa * l);
}

// |theta(z; p)| as a log-scale positive real.
LogC theta_abs(const Cplx& z, const Cplx& p)
{
    return lconst(theta_log(z, p).log_abs);
}

// |theta(a z; p) theta(a / z; p)|^kappa.
LogC theta_abs_pm_pow(const Cplx& a, const Cplx& z, const Cplx& p, const Cplx& kappa)
{
    Real l = theta_log(a * z, p).log_abs + theta_log(a / z, p).log_abs;
    return LogC{kappa.re * l, kappa.im * l};
}


// Deterministic evaluation cache.  The key is the argument rounded to 31
// digits and the stored value is computed from the rounded point itself, so
// a cache hit returns the same bits no matter which thread filled the entry.
// On product grids the pair arguments z_i z_j collide heavily, which turns
// O(N^2) gamma evaluations into O(N).
struct Memo {
    std::shared_ptr<std::map<std::string, LogC>> tab =
        std::make_shared<std::map<std::string, LogC>>();
    std::shared_ptr<std::mutex> mx = std::make_shared<std::mutex>();

    template <class F>
    LogC get(const Cplx& z, F&& eval) const
    {
        std::string kr = z.re.str(31, std::ios_base::scientific);
        std::string ki = z.im.str(31, std::ios_base::scientific);
        std::string key = kr + '|' + ki;
        {
            std::lock_guard<std::mutex> lk(*mx);
            auto it = tab->find(key);
            if (it != tab->end()) return it->second;
        }
        LogC v = eval(Cplx{Real(kr), Real(ki)});
        std::lock_guard<std::mutex> lk(*mx);
        return tab->emplace(key, v).first->second;
    }
};

void require(bool ok, const char* what)
{
    if (!ok) throw std::invalid_argument(what);
}

// ---------------------------------------------------------------- elliptic

struct EllCtx {
    std::vector<Cplx> ps;
    Memo memo;
    LogC ge(const Cplx& z) const
    {
        return memo.get(z, [&](const Cplx& zq) { return gamma_e_log(zq, ps); });
    }
    LogC ge_pm(const Cplx& c, const Cplx& z) const { return ge(c * z) * ge(c / z); }
    LogC ge_pmpm(const Cplx& c, const Cplx& zi, const Cplx& zj) const
    {
        return ge_pm(c * zi, zj) * ge_pm(c / zi, zj);
    }
};

IntegrandInfo build_elliptic(const IntegralSpec& spec)
{
    const int n = spec.n;
    EllCtx cx{{spec.p, spec.q}};
    require(cabs(spec.p) < 1 && cabs(spec.q) < 1, "elliptic bases need |p|,|q| < 1");

    LogC pp = qpoch_log(spec.p, spec.p), qq = qpoch_log(spec.q, spec.q);

    if (spec.family == Family::TYPE_A) {
        for (auto& ur : spec.u)
            require(cabs(ur) < 1, "A-type torus condition |u_r| < 1 violated");
        for (auto& vr : spec.v)
            require(cabs(vr) < 1, "A-type torus condition |v_r| < 1 violated");
        LogC pref = lpow_int(pp, n) * lpow_int(qq, n) * lconst(-lfact(n + 1));
        auto u = spec.u;
        auto v = spec.v;
        IntegrandInfo info;
        info.dim = n;
        info.regime = QuadRegime::TORUS_CONSTRAINED;
        info.radius.assign(n, Real(1));
        info.pole_rate = std::max(cabs(spec.p), cabs(spec.q));
        for (auto& ur : u) info.pole_rate = std::max(info.pole_rate, cabs(ur));
        for (auto& vr : v) info.pole_rate = std::max(info.pole_rate, cabs(vr));
        info.f = [cx, pref, u, v, n](const std::vector<Cplx>& z) {
            LogC val = pref;
            for (int i = 0; i <= n; ++i)
                for (size_t r = 0; r < u.size(); ++r)
                    val = val * cx.ge(u[r] * z[i]) * cx.ge(v[r] / z[i]);
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    val = val / (cx.ge(z[i] / z[j]) * cx.ge(z[j] / z[i]));
            return val;
        };
        return info;
    }

    // Broken-symmetry type I form (the theta-prefactored identity) when the
    // t-list is present.
    if (spec.family == Family::TYPE_I_BC && !spec.tv.empty()) {
        auto tv = spec.tv;
        auto u = spec.u;
        auto v = spec.v;
        Cplx a = spec.a, w = spec.w, p = spec.p, q = spec.q;
        Real lo(0), hi = Real(1) / eps_working();
        for (auto& tr : tv) lo = std::max(lo, Real(cabs(tr)));
        for (auto& ur : u) {
            lo = std::max(lo, Real(cabs(a) / cabs(ur)));
            hi = std::min(hi, Real(cabs(ur)));
        }
        for (auto& vr : v) {
            lo = std::max(lo, Real(cabs(p * q) / cabs(vr)));
            hi = std::min(hi, Real(cabs(a * vr) / cabs(p * q)));
        }
        for (auto& tr : tv) hi = std::min(hi, Real(cabs(a) / (cabs(p) * cabs(tr))));
        require(lo < hi, "broken elliptic contour annulus is empty");
        LogC pref = lpow_int(pp, n) * lpow_int(qq, n) * lconst(-lfact(n));
        IntegrandInfo info;
        info.dim = n;
        info.regime = QuadRegime::TORUS;
        info.radius.assign(n, sqrt(lo * hi));
        info.pole_rate = sqrt(lo / hi);
        Cplx tprod{Real(1)};
        for (auto& tr : tv) tprod = tprod * tr;
        info.f = [cx, pref, tv, u, v, a, w, p, q, tprod, n](const std::vector<Cplx>& z) {
            Cplx zprod{Real(1)};
            for (auto& zi : z) zprod = zprod * zi;
            LogC val = pref * theta_log(tprod / (w * zprod), q);
            for (auto& zi : z) val = val * theta_log(zi / w, q);
            for (auto& tr : tv) val = val / theta_log(tr / w, q);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j)
                    val = val * theta_log(p * z[i] * z[j] / a, p);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val / (cx.ge(z[i] / z[j]) * cx.ge(z[j] / z[i]));
            for (auto& zi : z) {
                for (auto& tr : tv) val = val * cx.ge(p * tr * zi / a) * cx.ge(tr / zi);
                for (auto& ur : u) val = val * cx.ge(zi / ur) / cx.ge(p * q * zi * ur / a);
                for (auto& vr : v) val = val * cx.ge(p * q * zi / (a * vr)) / cx.ge(zi * vr);
            }
            return val;
        };
        return info;
    }

    for (auto& ur : spec.u)
        require(cabs(ur) < 1, "torus condition |u_r| < 1 violated");

    LogC pref = lpow_int(pp, n) * lpow_int(qq, n) *
                lconst(-lfact(n) - Real(n) * log2_const());
    auto u = spec.u;
    IntegrandInfo info;
    info.dim = n;
    info.regime = QuadRegime::TORUS;
    info.radius.assign(n, Real(1));
    info.pole_rate = std::max(cabs(spec.p), cabs(spec.q));
    for (auto& ur : u) info.pole_rate = std::max(info.pole_rate, cabs(ur));

    if (spec.family == Family::TYPE_I_BC) {
        info.f = [cx, pref, u, n](const std::vector<Cplx>& z) {
            LogC val = pref;
            for (auto& zi : z)
                for (auto& ur : u) val = val * cx.ge_pm(ur, zi);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val / cx.ge_pmpm(Cplx{Real(1)}, z[i], z[j]);
            for (auto& zi : z) val = val / (cx.ge(zi * zi) * cx.ge(Cplx{Real(1)} / (zi * zi)));
            return val;
        };
    } else {
        Cplx t = spec.t;
        pref = pref * lpow_int(cx.ge(t), n);
        info.f = [cx, pref, u, t, n](const std::vector<Cplx>& z) {
            LogC val = pref;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val * cx.ge_pmpm(t, z[i], z[j]) /
                          cx.ge_pmpm(Cplx{Real(1)}, z[i], z[j]);
            for (auto& zi : z) {
                for (auto& ur : u) val = val * cx.ge_pm(ur, zi);
                val = val / (cx.ge(zi * zi) * cx.ge(Cplx{Real(1)} / (zi * zi)));
            }
            return val;
        };
    }
    return info;
}

// --------------------------------------------------------------- hyperbolic

struct HypCtx {
    std::vector<Cplx> om;
    Memo memo;
    LogC gh(const Cplx& x) const
    {
        return memo.get(x, [&](const Cplx& xq) { return gamma_h_log(xq, om); });
    }
    LogC gh_pm(const Cplx& c, const Cplx& x) const { return gh(c + x) * gh(c - x); }
    LogC gh_pmpm(const Cplx& c, const Cplx& xi, const Cplx& xj) const
    {
        return gh_pm(c + xi, xj) * gh_pm(c - xi, xj);
    }
};

IntegrandInfo build_hyperbolic(const IntegralSpec& spec)
{
    const int n = spec.n;
    require(spec.omega.size() == 2, "hyperbolic level needs two periods");
    HypCtx cx{spec.omega};
    for (auto& o : cx.om) require(o.im > 0, "periods need positive imaginary part");
    for (auto& mr : spec.mu)
        require(mr.im > 0, "hyperbolic line condition Im(mu_r) > 0 violated");

    // 1 / sqrt(-w1 w2)^n, principal branch.
    LogC root = lpow_int(LogC::from_cplx(csqrt(-cx.om[0] * cx.om[1])), -n);

    auto mu = spec.mu;
    IntegrandInfo info;
    info.dim = n;
    info.regime = QuadRegime::LINE;

    if (spec.family == Family::TYPE_A) {
        for (auto& nr : spec.nu)
            require(nr.im > 0, "hyperbolic line condition Im(nu_r) > 0 violated");
        auto nu = spec.nu;
        LogC pref = root * lconst(-lfact(n + 1));
        info.regime = QuadRegime::LINE_CONSTRAINED;
        info.f = [cx, pref, mu, nu, n](const std::vector<Cplx>& x) {
            LogC val = pref;
            for (int i = 0; i <= n; ++i)
                for (size_t r = 0; r < mu.size(); ++r)
                    val = val * cx.gh(mu[r] + x[i]) * cx.gh(nu[r] - x[i]);
            for (int i = 0; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    val = val / (cx.gh(x[i] - x[j]) * cx.gh(x[j] - x[i]));
            return val;
        };
        return info;
    }

    LogC pref = root * lconst(-lfact(n) - Real(n) * log2_const());
    if (spec.family == Family::TYPE_I_BC) {
        info.f = [cx, pref, mu, n](const std::vector<Cplx>& x) {
            LogC val = pref;
            for (auto& xi : x) {
                for (auto& mr : mu) val = val * cx.gh_pm(mr, xi);
                val = val / cx.gh_pm(Cplx{}, xi + xi);
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val / cx.gh_pmpm(Cplx{}, x[i], x[j]);
            return val;
        };
    } else {
        require(spec.tau.im > 0, "type II coupling needs Im(tau) > 0");
        Cplx tau = spec.tau;
        pref = pref * lpow_int(cx.gh(tau), n);
        info.f = [cx, pref, mu, tau, n](const std::vector<Cplx>& x) {
            LogC val = pref;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val * cx.gh_pmpm(tau, x[i], x[j]) /
                          cx.gh_pmpm(Cplx{}, x[i], x[j]);
            for (auto& xi : x) {
                for (auto& mr : mu) val = val * cx.gh_pm(mr, xi);
                val = val / cx.gh_pm(Cplx{}, xi + xi);
            }
            return val;
        };
    }
    return info;
}

// ------------------------------------------------------------ trigonometric

struct TrigCtx {
    Cplx q;
    Memo memo;
    LogC gt(const Cplx& z) const
    {
        return memo.get(z, [&](const Cplx& zq) { return gamma_t_log(zq, q); });
    }
    LogC gt_pm(const Cplx& c, const Cplx& z) const { return gt(c * z) * gt(c / z); }
    LogC gt_pmpm(const Cplx& c, const Cplx& zi, const Cplx& zj) const
    {
        return gt_pm(c * zi, zj) * gt_pm(c / zi, zj);
    }
    LogC th(const Cplx& z) const { return theta_log(z, q); }
};

IntegrandInfo build_trig(const IntegralSpec& spec)
{
    TrigCtx cx{spec.q};
    require(cabs(spec.q) < 1, "trigonometric base needs |q| < 1");
    LogC qq = qpoch_log(spec.q, spec.q);
    auto u = spec.u;
    auto v = spec.v;
    IntegrandInfo info;

    if (spec.level == Level::TRIG_DIRECT) {
        const int n = spec.n;
        info.dim = n;
        info.regime = QuadRegime::TORUS;
        info.radius.assign(n, Real(1));
        for (auto& ur : u)
            require(cabs(ur) < 1, "torus condition |u_r| < 1 violated");
        info.pole_rate = cabs(spec.q);
        for (auto& ur : u) info.pole_rate = std::max(info.pole_rate, cabs(ur));
        if (spec.family == Family::TYPE_I_BC) {
            LogC pref = lpow_int(qq, n) * lconst(-lfact(n) - Real(n) * log2_const());
            info.f = [cx, pref, u, v, n](const std::vector<Cplx>& z) {
                LogC val = pref;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        val = val / cx.gt_pmpm(Cplx{Real(1)}, z[i], z[j]);
                for (auto& zi : z) {
                    for (auto& ur : u) val = val * cx.gt_pm(ur, zi);
                    val = val / (cx.gt(zi * zi) * cx.gt(Cplx{Real(1)} / (zi * zi)));
                    for (auto& vr : v) val = val / cx.gt_pm(vr, zi);
                }
                return val;
            };
        } else {
            Cplx t = spec.t;
            LogC pref = lpow_int(qq, n) * lpow_int(cx.gt(t), n) *
                        lconst(-lfact(n) - Real(n) * log2_const());
            info.f = [cx, pref, u, v, t, n](const std::vector<Cplx>& z) {
                LogC val = pref;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        val = val * cx.gt_pmpm(t, z[i], z[j]) /
                              cx.gt_pmpm(Cplx{Real(1)}, z[i], z[j]);
                for (auto& zi : z) {
                    for (auto& ur : u) val = val * cx.gt_pm(ur, zi);
                    val = val / (cx.gt(zi * zi) * cx.gt(Cplx{Real(1)} / (zi * zi)));
                    for (auto& vr : v) val = val / cx.gt_pm(vr, zi);
                }
                return val;
            };
        }
        return info;
    }

    // Broken-symmetry trigonometric forms.
    Cplx q = spec.q, w = spec.w;
    if (spec.family == Family::TYPE_I_BC && spec.tv.empty()) {
        // a = pq limit: integral over m variables.
        const int m = spec.m;
        info.dim = m;
        info.regime = QuadRegime::TORUS;
        Real lo(0), hi = Real(1) / eps_working();
        for (auto& vr : v) {
            lo = std::max(lo, Real(cabs(vr)));
            hi = std::min(hi, Real(cabs(q) / cabs(vr)));
        }
        for (auto& ur : u) hi = std::min(hi, Real(cabs(ur)));
        require(lo < hi, "broken trig contour annulus is empty");
        info.radius.assign(m, sqrt(lo * hi));
        info.pole_rate = sqrt(lo / hi);
        Cplx vprod{Real(1)};
        for (auto& vr : v) vprod = vprod * vr;
        LogC pref = lpow_int(qq, m) * lconst(-lfact(m));
        info.f = [cx, pref, u, v, q, w, vprod, m](const std::vector<Cplx>& z) {
            Cplx zprod{Real(1)};
            for (auto& zi : z) zprod = zprod * zi;
            LogC val = pref * cx.th(vprod / (w * zprod));
            for (auto& zi : z) val = val * cx.th(zi / w);
            for (auto& vr : v) val = val / cx.th(vr / w);
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j)
                    val = val * LogC::from_cplx(Cplx{Real(1)} - z[i] * z[j] / q);
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    val = val / (cx.gt(z[i] / z[j]) * cx.gt(z[j] / z[i]));
            for (auto& zi : z) {
                for (auto& ur : u) val = val * cx.gt(zi / ur) / cx.gt(zi * ur);
                for (auto& vr : v) val = val * cx.gt(vr * zi / q) * cx.gt(vr / zi);
            }
            return val;
        };
        return info;
    }
    if (spec.family == Family::TYPE_I_BC) {
        // a = (pq)^{1/2} limit: t-list present, integral over n variables.
        const int n = spec.n;
        auto tv = spec.tv;
        info.dim = n;
        info.regime = QuadRegime::TORUS;
        Real lo(0), hi = Real(1) / eps_working();
        for (auto& tr : tv) lo = std::max(lo, Real(cabs(tr)));
        for (auto& ur : u) hi = std::min(hi, Real(cabs(ur)));
        require(lo < hi, "broken trig contour annulus is empty");
        info.radius.assign(n, sqrt(lo * hi));
        info.pole_rate = sqrt(lo / hi);
        Cplx tprod{Real(1)};
        for (auto& tr : tv) tprod = tprod * tr;
        LogC pref = lpow_int(qq, n) * lconst(-lfact(n));
        info.f = [cx, pref, tv, u, v, w, tprod, n](const std::vector<Cplx>& z) {
            Cplx zprod{Real(1)};
            for (auto& zi : z) zprod = zprod * zi;
            LogC val = pref * cx.th(tprod / (w * zprod));
            for (auto& zi : z) val = val * cx.th(zi / w);
            for (auto& tr : tv) val = val / cx.th(tr / w);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val / (cx.gt(z[i] / z[j]) * cx.gt(z[j] / z[i]));
            for (auto& zi : z) {
                for (auto& tr : tv) val = val * cx.gt(tr / zi);
                for (auto& ur : u) val = val * cx.gt(zi / ur);
                for (auto& vr : v) val = val / cx.gt(zi * vr);
            }
            return val;
        };
        return info;
    }

    // Type II broken forms.
    const int n = spec.n;
    Cplx t = spec.t;
    info.dim = n;
    info.regime = QuadRegime::TORUS;
    Cplx tn1 = cpow_int(t, n - 1);
    if (spec.tv.empty()) {
        // a = pq limit: v_0, v_1 inside, u_r outside.
        require(v.size() == 2, "broken type II trig form needs v_0, v_1");
        Real lo = std::max(cabs(v[0]), cabs(v[1]));
        Real hi = sqrt(cabs(q) / cabs(t));
        for (auto& ur : u) hi = std::min(hi, Real(cabs(ur)));
        hi = std::min(hi, Real(cabs(q) / lo));
        require(lo < hi, "broken trig contour annulus is empty");
        info.radius.assign(n, sqrt(lo * hi));
        info.pole_rate = sqrt(lo / hi);
        LogC pref = lpow_int(qq, n) * lpow_int(cx.gt(t), n) * lconst(-lfact(n));
        info.f = [cx, pref, u, v, q, w, t, tn1, n](const std::vector<Cplx>& z) {
            LogC val = pref;
            Cplx tp{Real(1)};
            for (int i = 0; i < n; ++i) {
                val = val * cx.th(z[i] / w) * cx.th(tn1 * v[0] * v[1] / (w * z[i])) /
                      (cx.th(tp * v[0] / w) * cx.th(tp * v[1] / w));
                tp = tp * t;
            }
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val * cx.gt(t * z[i] * z[j] / q) * cx.gt(z[i] * z[j]) *
                          cx.gt(t * z[i] / z[j]) * cx.gt(t * z[j] / z[i]) /
                          (cx.gt(z[i] * z[j] / q) * cx.gt(z[i] * z[j] / t) *
                           cx.gt(z[i] / z[j]) * cx.gt(z[j] / z[i]));
            for (auto& zi : z) {
                val = val * LogC::from_cplx(Cplx{Real(1)} - zi * zi / q);
                val = val * cx.gt(v[0] * zi / q) * cx.gt(v[1] * zi / q) *
                      cx.gt(v[0] / zi) * cx.gt(v[1] / zi);
                for (auto& ur : u) val = val * cx.gt(zi / ur) / cx.gt(zi * ur);
            }
            return val;
        };
        return info;
    }
    // a = p^{1/2} limit: t_0, t_1 inside, u_r outside.
    auto tv = spec.tv;
    require(tv.size() == 2, "broken type II trig form needs t_0, t_1");
    Real lo = std::max(cabs(tv[0]), cabs(tv[1]));
    Real hi = Real(1) / eps_working();
    for (auto& ur : u) hi = std::min(hi, Real(cabs(ur)));
    require(lo < hi, "broken trig contour annulus is empty");
    info.radius.assign(n, sqrt(lo * hi));
    info.pole_rate = sqrt(lo / hi);
    LogC pref = lpow_int(qq, n) * lpow_int(cx.gt(t), n) * lconst(-lfact(n));
    info.f = [cx, pref, tv, u, v, w, t, tn1, n](const std::vector<Cplx>& z) {
        LogC val = pref;
        Cplx tp{Real(1)};
        for (int i = 0; i < n; ++i) {
            val = val * cx.th(z[i] / w) * cx.th(tn1 * tv[0] * tv[1] / (w * z[i])) /
                  (cx.th(tp * tv[0] / w) * cx.th(tp * tv[1] / w));
            tp = tp * t;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                val = val * cx.gt(t * z[i] / z[j]) * cx.gt(t * z[j] / z[i]) /
                      (cx.gt(z[i] / z[j]) * cx.gt(z[j] / z[i]));
        for (auto& zi : z) {
            val = val * cx.gt(tv[0] / zi) * cx.gt(tv[1] / zi);
            for (auto& ur : u) val = val * cx.gt(zi / ur);
            for (auto& vr : v) val = val / cx.gt(zi * vr);
        }
        return val;
    };
    return info;
}

// ----------------------------------------------------------------- rational

struct RatCtx {
    Cplx om;
    Memo memo;
    LogC gr(const Cplx& x) const
    {
        return memo.get(x, [&](const Cplx& xq) { return gamma_r_log(xq, om); });
    }
    LogC gr_pm(const Cplx& c, const Cplx& x) const { return gr(c + x) * gr(c - x); }
};

IntegrandInfo build_rational(const IntegralSpec& spec)
{
    require(spec.omega.size() == 1, "rational level needs one period");
    RatCtx cx{spec.omega[0]};
    require(cx.om.im > 0, "rational period needs positive imaginary part");
    Cplx om = cx.om;
    const int n = spec.n;
    auto mu = spec.mu;
    auto nu = spec.nu;
    // log(sqrt(2 pi) omega / i), principal branch.
    Cplx lr = clog(csqrt(Cplx{Real(2) * pi()}) * om / iunit());

    IntegrandInfo info;

    if (spec.level == Level::RATIONAL_DIRECT) {
        for (auto& mr : mu)
            require(mr.im > 0, "rational line condition Im(mu_r) > 0 violated");
        info.dim = n;
        info.regime = QuadRegime::LINE;
        if (spec.family == Family::TYPE_I_BC) {
            LogC pref = LogC::from_log(-Real(n) * lr) *
                        lconst(-lfact(n) - Real(n) * log2_const());
            info.f = [cx, pref, mu, nu, n](const std::vector<Cplx>& x) {
                LogC val = pref;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        val = val / (cx.gr_pm(x[i] + x[j], Cplx{}) *
                                     cx.gr_pm(x[i] - x[j], Cplx{}));
                for (auto& xi : x) {
                    for (auto& mr : mu) val = val * cx.gr_pm(mr, xi);
                    val = val / cx.gr_pm(Cplx{}, xi + xi);
                    for (auto& nr : nu) val = val / cx.gr_pm(nr, xi);
                }
                return val;
            };
        } else {
            Cplx tau = spec.tau;
            require(tau.im > 0, "type II coupling needs Im(tau) > 0");
            LogC pref = lpow_int(cx.gr(tau), n) * LogC::from_log(-Real(n) * lr) *
                        lconst(-lfact(n) - Real(n) * log2_const());
            info.f = [cx, pref, mu, nu, tau, n](const std::vector<Cplx>& x) {
                LogC val = pref;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        val = val * cx.gr_pm(tau + x[i], x[j]) * cx.gr_pm(tau - x[i], x[j]) /
                              (cx.gr_pm(x[i] + x[j], Cplx{}) * cx.gr_pm(x[i] - x[j], Cplx{}));
                for (auto& xi : x) {
                    for (auto& mr : mu) val = val * cx.gr_pm(mr, xi);
                    val = val / cx.gr_pm(Cplx{}, xi + xi);
                    for (auto& nr : nu) val = val / cx.gr_pm(nr, xi);
                }
                return val;
            };
        }
        return info;
    }

    // Broken rational forms on the contour omega/2 + R (shift applied here).
    Cplx shift = om / Real(2);
    Cplx w = spec.w;
    info.shift = shift;
    info.regime = QuadRegime::LINE;
    for (auto& mr : mu)
        require(mr.im < shift.im, "broken rational contour needs Im(mu_r) < Im(omega)/2");
    for (auto& nr : nu)
        require(nr.im > shift.im, "broken rational contour needs Im(nu_r) > Im(omega)/2");

    if (spec.family == Family::TYPE_I_BC) {
        const int m = spec.m;
        info.dim = m;
        Cplx nsum{};
        for (auto& nr : nu) nsum = nsum + nr;
        LogC wconst = LogC::one();
        for (auto& nr : nu) wconst = wconst / theta_h_log(nr - w, om);
        LogC pref = LogC::from_log(-Real(m) * lr) * lconst(-lfact(m)) * wconst;
        info.f = [cx, pref, mu, nu, nsum, om, w, shift, m](const std::vector<Cplx>& s) {
            std::vector<Cplx> x(s);
            for (auto& xi : x) xi = xi + shift;
            Cplx xsum{};
            for (auto& xi : x) xsum = xsum + xi;
            LogC val = pref * theta_h_log(nsum - w - xsum, om);
            for (auto& xi : x) val = val * theta_h_log(xi - w, om);
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j)
                    val = val * LogC::from_cplx((x[i] + x[j]) / om - Cplx{Real(1)});
            for (int i = 0; i < m; ++i)
                for (int j = i + 1; j < m; ++j)
                    val = val / cx.gr_pm(Cplx{}, x[i] - x[j]);
            for (auto& xi : x) {
                for (auto& mr : mu) val = val * cx.gr(xi - mr) / cx.gr(xi + mr);
                for (auto& nr : nu) val = val * cx.gr(nr + xi - om) * cx.gr(nr - xi);
            }
            return val;
        };
        return info;
    }

    // Nonsymmetric type II rational form.
    Cplx tau = spec.tau;
    require(tau.im > 0, "type II coupling needs Im(tau) > 0");
    require(nu.size() == 2, "nonsymmetric type II rational form needs nu_0, nu_1");
    info.dim = n;
    Cplx tn1 = Real(n - 1) * tau;
    LogC wconst = LogC::one();
    {
        Cplx tp{};
        for (int i = 0; i < n; ++i) {
            wconst = wconst / (theta_h_log(tp + nu[0] - w, om) *
                               theta_h_log(tp + nu[1] - w, om));
            tp = tp + tau;
        }
    }
    LogC pref = lpow_int(cx.gr(tau), n) * LogC::from_log(-Real(n) * lr) *
                lconst(-lfact(n)) * wconst;
    info.f = [cx, pref, mu, nu, tau, tn1, om, w, shift, n](const std::vector<Cplx>& s) {
        std::vector<Cplx> x(s);
        for (auto& xi : x) xi = xi + shift;
        LogC val = pref;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                val = val * cx.gr(tau + x[i] + x[j] - om) * cx.gr(x[i] + x[j]) *
                      cx.gr(tau + x[i] - x[j]) * cx.gr(tau + x[j] - x[i]) /
                      (cx.gr(x[i] + x[j] - om) * cx.gr(x[i] + x[j] - tau) *
                       cx.gr(x[i] - x[j]) * cx.gr(x[j] - x[i]));
        for (auto& xi : x) {
            val = val * LogC::from_cplx((xi + xi) / om - Cplx{Real(1)});
            val = val * cx.gr(nu[0] + xi - om) * cx.gr(nu[1] + xi - om) *
                  cx.gr(nu[0] - xi) * cx.gr(nu[1] - xi);
            val = val * theta_h_log(xi - w, om) *
                  theta_h_log(tn1 + nu[0] + nu[1] - w - xi, om);
            for (auto& mr : mu) val = val * cx.gr(xi - mr) / cx.gr(xi + mr);
        }
        return val;
    };
    return info;
}

// ---------------------------------------------------------------- classical

IntegrandInfo build_classical(const IntegralSpec& spec)
{
    const int n = spec.n;
    Cplx p{spec.cl_p};
    require(spec.cl_p > -1 && spec.cl_p < 1, "classical base needs -1 < p < 1");

    IntegrandInfo info;
    info.regime = QuadRegime::ARC;

    if (!spec.on_circle) {
        // Real-interval forms: |x_i - x_j| densities.
        auto a = spec.pos_a;
        auto b = spec.pos_b;
        auto al = spec.alpha;
        auto be = spec.beta;
        Cplx tau = spec.tau;
        if (spec.family == Family::TYPE_II_BC) {
            // Selberg form on [a_0, a_1]^n; one b point uses the balanced
            // denominator exponent, two points the transformation form.  The
            // |x_i - x_j|^{2 tau} density is singular along the diagonal, so
            // the ordered region is mapped onto the unit box, which places
            // every singular factor on a face where the double-exponential
            // rule converges.
            info.dim = n;
            info.arc_lo.assign(n, Real(0));
            info.arc_hi.assign(n, Real(1));
            std::vector<Cplx> den_exp;
            if (b.size() == 1)
                den_exp = {Real(2 * (n - 1)) * tau + al[0] + al[1]};
            else
                for (size_t r = 0; r < b.size(); ++r)
                    den_exp.push_back(Real(n - 1) * tau + be[r]);
            // times n! orderings, over the 1/n! of the symmetric form
            LogC pref = b.size() == 1 ? LogC::one() : lconst(lfact(n));
            info.f = [pref, a, b, al, den_exp, tau, n](const std::vector<Cplx>& s) {
                std::vector<Real> x(n);
                Real jac(1);
                x[n - 1] = a[0] + (a[1] - a[0]) * s[n - 1].re;
                jac *= a[1] - a[0];
                for (int k = n - 2; k >= 0; --k) {
                    Real width = x[k + 1] - a[0];
                    x[k] = a[0] + width * s[k].re;
                    jac *= width;
                }
                LogC val = pref * lconst(log(jac));
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        Real l = log(x[j] - x[i]);
                        val = val * LogC{Real(2) * (tau.re * l), Real(2) * tau.im * l};
                    }
                for (auto& xi : x) {
                    for (size_t r = 0; r < 2; ++r) {
                        Real l = log(abs(a[r] - xi));
                        Cplx k = al[r] - Cplx{Real(1)};
                        val = val * LogC{k.re * l, k.im * l};
                    }
                    for (size_t r = 0; r < b.size(); ++r) {
                        Real l = log(abs(b[r] + xi));
                        val = val / LogC{den_exp[r].re * l, den_exp[r].im * l};
                    }
                }
                return val;
            };
            return info;
        }
        // Dixon form on ordered intervals [a_{i-1}, a_i].
        info.dim = n;
        for (int i = 0; i < n; ++i) {
            info.arc_lo.push_back(a[i]);
            info.arc_hi.push_back(a[i + 1]);
        }
        info.f = [a, b, al, be, n](const std::vector<Cplx>& x) {
            LogC val = LogC::one();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val * lconst(log(abs(x[i].re - x[j].re)));
            for (auto& xi : x) {
                for (size_t r = 0; r < a.size(); ++r) {
                    Real l = log(abs(a[r] - xi.re));
                    Cplx k = al[r] - Cplx{Real(1)};
                    val = val * LogC{k.re * l, k.im * l};
                }
                for (size_t r = 0; r < b.size(); ++r) {
                    Real l = log(abs(xi.re + b[r]));
                    val = val / LogC{be[r].re * l, be[r].im * l};
                }
            }
            return val;
        };
        return info;
    }

    // Circle-arc forms; positions are angles in turns, alpha/beta interleave
    // the +/- exponent halves and the integrand uses their sums.
    LogC ppar = qpoch_log(p, p);
    LogC circ = lpow_int(lconst(log(Real(2) * pi())) * ppar * ppar, n);
    std::vector<Cplx> av, bv, al, be;
    for (auto& t : spec.pos_a) av.push_back(e_of(Cplx{t}));
    for (auto& t : spec.pos_b) bv.push_back(e_of(Cplx{t}));
    for (size_t r = 0; r + 1 < spec.alpha.size(); r += 2)
        al.push_back(spec.alpha[r] + spec.alpha[r + 1]);
    for (size_t r = 0; r + 1 < spec.beta.size(); r += 2)
        be.push_back(spec.beta[r] + spec.beta[r + 1]);
    Cplx rootp = csqrt(p);

    if (spec.family == Family::TYPE_A) {
        // One free variable at n = 1: z_0 on its arc, z_1 = Z / z_0.
        require(n == 1, "A-type classical form implemented for n = 1");
        Cplx Z = spec.Z;
        Real phiZ = carg(Z) / (Real(2) * pi());
        if (phiZ < 0) phiZ += 1;
        Real lo = std::max(spec.pos_a[0], Real(phiZ - (spec.pos_a[0] + 1)));
        Real hi = std::min(spec.pos_a[1], Real(phiZ - spec.pos_a[1]));
        require(lo < hi, "A-type classical constraint arc is empty");
        info.dim = 1;
        info.arc_lo = {lo};
        info.arc_hi = {hi};
        info.f = [circ, av, bv, al, be, p, rootp, Z](const std::vector<Cplx>& phi) {
            Cplx z0 = e_of(Cplx{phi[0].re});
            Cplx z1 = Z / z0;
            LogC val = circ * theta_abs(z0 / z1, p);
            for (auto z : {z0, z1}) {
                for (size_t r = 0; r < av.size(); ++r) {
                    Real l = theta_log(z / av[r], p).log_abs;
                    Cplx k = al[r] - Cplx{Real(1)};
                    val = val * LogC{k.re * l, k.im * l};
                }
                for (size_t r = 0; r < bv.size(); ++r) {
                    Real l = theta_log(rootp * bv[r] * z, p).log_abs;
                    val = val / LogC{be[r].re * l, be[r].im * l};
                }
            }
            return val;
        };
        return info;
    }

    if (spec.family == Family::TYPE_I_BC) {
        info.dim = n;
        for (int i = 0; i < n; ++i) {
            info.arc_lo.push_back(spec.pos_a[i]);
            info.arc_hi.push_back(spec.pos_a[i + 1]);
        }
        info.f = [circ, av, bv, al, be, p, rootp, n](const std::vector<Cplx>& phi) {
            std::vector<Cplx> z;
            for (auto& ph : phi) z.push_back(e_of(Cplx{ph.re}));
            LogC val = circ;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    val = val * theta_abs(z[i] * z[j], p) * theta_abs(z[i] / z[j], p);
            for (auto& zi : z) {
                val = val * theta_abs(zi * zi, p);
                for (size_t r = 0; r < av.size(); ++r)
                    val = val * theta_abs_pm_pow(av[r], zi, p, al[r] - Cplx{Real(1)});
                for (size_t r = 0; r < bv.size(); ++r)
                    val = val / theta_abs_pm_pow(rootp * bv[r], zi, p, be[r]);
            }
            return val;
        };
        return info;
    }

    // Type II circle form on [a_0, a_1]^n.
    Cplx tau = spec.tau;
    info.dim = n;
    info.arc_lo.assign(n, spec.pos_a[0]);
    info.arc_hi.assign(n, spec.pos_a[1]);
    LogC pref = circ * lconst(-lfact(n));
    info.f = [pref, av, bv, al, be, p, rootp, tau, n](const std::vector<Cplx>& phi) {
        std::vector<Cplx> z;
        for (auto& ph : phi) z.push_back(e_of(Cplx{ph.re}));
        LogC val = pref;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Real l = theta_log(z[i] * z[j], p).log_abs +
                         theta_log(z[i] / z[j], p).log_abs;
                val = val * LogC{Real(2) * tau.re * l, Real(2) * tau.im * l};
            }
        for (auto& zi : z) {
            val = val * theta_abs(zi * zi, p);
            for (size_t r = 0; r < av.size(); ++r)
                val = val * theta_abs_pm_pow(av[r], zi, p, al[r] - Cplx{Real(1)});
            for (size_t r = 0; r < bv.size(); ++r)
                val = val / theta_abs_pm_pow(rootp * bv[r], zi, p, be[r]);
        }
        return val;
    };
    return info;
}

// ------------------------------------------------------- quadrature drivers

// Pole distance from the real contour, used to size the line step.
Real line_pole_distance(const IntegralSpec& spec)
{
    Real d = Real(1) / Real(2);
    if (spec.level == Level::HYPERBOLIC || spec.level == Level::RATIONAL_DIRECT) {
        for (auto& mr : spec.mu) d = std::min(d, Real(mr.im));
        for (auto& nr : spec.nu) d = std::min(d, Real(nr.im));
        if (spec.family == Family::TYPE_II_BC) d = std::min(d, Real(spec.tau.im / 2));
    } else {
        Real half = spec.omega[0].im / 2;
        for (auto& mr : spec.mu) d = std::min(d, Real(abs(half - mr.im)));
        for (auto& nr : spec.nu) d = std::min(d, Real(abs(nr.im - half)));
        if (spec.family == Family::TYPE_II_BC) d = std::min(d, Real(spec.tau.im / 2));
    }
    return d;
}

struct LineChoice {
    Real T, h0, decay;
};

// Probes the integrand along each axis to find the truncation point and an
// empirical tail decay rate.
LineChoice probe_line(const Integrand& f, int dim, bool constrained, const Real& tol)
{
    auto eval_at = [&](const std::vector<Cplx>& x) {
        if (!constrained) return f(x);
        std::vector<Cplx> full(1);
        Cplx s{};
        for (auto& xi : x) s = s + xi;
        full[0] = -s;
        for (auto& xi : x) full.push_back(xi);
        return f(full);
    };
    std::vector<Cplx> base(dim);
    for (int j = 0; j < dim; ++j) base[j] = Cplx{Real(23) / 100 + Real(7 * j) / 100};
    Real ref = eval_at(base).log_abs;
    Real target = ref + log(tol) - 12;
    Real T(1), decay(1);
    for (int j = 0; j < dim; ++j) {
        Real t(1), prev = ref;
        for (int step = 0; step < 12; ++step) {
            auto x = base;
            x[j] = x[j] + Cplx{t};
            Real cur = eval_at(x).log_abs;
            if (cur < target || isinf(cur)) {
                Real lam = (prev - cur) / (t / 2);
                if (step == 0) lam = (ref - cur) / t;
                if (lam > 0 && (j == 0 || lam < decay)) decay = lam;
                if (j == 0) decay = std::max(lam, Real(1) / 100);
                T = std::max(T, t);
                break;
            }
            prev = cur;
            t *= 2;
            if (step == 11) T = std::max(T, t);
        }
    }
    LineChoice c;
    c.T = T + 1;
    c.decay = decay;
    c.h0 = Real(1) / 2;
    return c;
}

} // namespace

LogC theta_h_log(const Cplx& x, const Cplx& omega)
{
    Cplx y = pi() * x / omega;
    // 2 sin(y) = -i (e^{iy} - e^{-iy}); track the dominant exponential in
    // log scale so large imaginary parts cannot overflow.
    if (abs(y.im) > 30) {
        // Factor out the dominant exponential so the remaining one
        // underflows harmlessly instead of overflowing the exponent range.
        Cplx lead = y.im > 0 ? Cplx{Real(0), Real(-1)} * y : Cplx{Real(0), Real(1)} * y;
        Cplx rest = y.im > 0
                        ? Cplx{Real(1)} - cexp(Cplx{Real(0), Real(2)} * y)
                        : Cplx{Real(1)} - cexp(Cplx{Real(0), Real(-2)} * y);
        Cplx sgn = y.im > 0 ? iunit() : -iunit();
        return LogC::from_log(lead) * LogC::from_cplx(sgn * rest);
    }
    return LogC::from_cplx(Real(2) * csin(y));
}

IntegrandInfo build_integrand(const IntegralSpec& spec)
{
    switch (spec.level) {
    case Level::ELLIPTIC: return build_elliptic(spec);
    case Level::HYPERBOLIC: return build_hyperbolic(spec);
    case Level::TRIG_DIRECT:
    case Level::TRIG_BROKEN: return build_trig(spec);
    case Level::RATIONAL_DIRECT:
    case Level::RATIONAL_BROKEN: return build_rational(spec);
    case Level::CLASSICAL: return build_classical(spec);
    }
    throw std::invalid_argument("unknown level");
}

QuadResult eval_integral(const IntegralSpec& spec, const Real& tol)
{
    require(tol > eps_working() * 100, "tolerance below the working-precision floor");
    IntegrandInfo info = build_integrand(spec);

    if (info.dim == 0) {
        QuadResult r;
        r.value = info.f({});
        r.n_points = 1;
        return r;
    }

    switch (info.regime) {
    case QuadRegime::TORUS:
    case QuadRegime::TORUS_CONSTRAINED: {
        int N0 = 16;
        if (info.pole_rate > 0 && info.pole_rate < 1) {
            Real need = log(tol) / log(info.pole_rate) + 8;
            while (N0 < need && N0 < (1 << 14)) N0 *= 2;
        }
        int steps = info.dim >= 3 ? 3 : (info.dim == 2 ? 4 : 5);
        auto make = [&](int k) {
            int N = N0 << k;
            if (info.regime == QuadRegime::TORUS)
                return torus_quad(info.f, info.dim, N, info.radius);
            return constrained_torus_quad(info.f, info.dim, N, spec.Z, info.radius);
        };
        return refine_until(make, tol, steps);
    }
    case QuadRegime::LINE:
    case QuadRegime::LINE_CONSTRAINED: {
        bool constrained = info.regime == QuadRegime::LINE_CONSTRAINED;
        Integrand f = info.f;
        if (spec.level == Level::RATIONAL_BROKEN) {
            // The broken rational integrands decay like a power of the line
            // variable (the classical gamma ratios contribute no exponential
            // factor there), so substitute x = sinh(u) per coordinate to make
            // the tails exponential in u.
            Integrand base = info.f;
            f = [base](const std::vector<Cplx>& u) {
                std::vector<Cplx> x(u.size());
                LogC jac = LogC::one();
                for (size_t i = 0; i < u.size(); ++i) {
                    x[i] = Cplx{sinh(u[i].re)};
                    jac = jac * LogC::from_cplx(Cplx{cosh(u[i].re)});
                }
                return base(x) * jac;
            };
        }
        LineChoice c = probe_line(f, info.dim, constrained, tol);
        Real d = line_pole_distance(spec);
        Real h0 = std::min(Real(1) / 2, Real(2) * pi() * d / 10);
        int steps = info.dim >= 2 ? 5 : 7;
        auto make = [&](int k) {
            Real h = h0 / Real(1 << k);
            if (!constrained)
                return line_quad(f, info.dim, h, c.T, Real(0), c.decay);
            return constrained_line_quad(f, info.dim, h, c.T, Real(0), Cplx{},
                                         c.decay);
        };
        return refine_until(make, tol, steps);
    }
    case QuadRegime::ARC: {
        int steps = info.dim >= 3 ? 3 : (info.dim == 2 ? 4 : 5);
        auto make = [&](int k) {
            return arc_quad(info.f, info.dim, 16 << k, info.arc_lo, info.arc_hi);
        };
        return refine_until(make, tol, steps);
    }
    }
    throw std::invalid_argument("unknown regime");
}

// ------------------------------------------------------------- closed forms

LogC closed_form(ClosedFormId id, const IntegralSpec& spec)
{
    switch (id) {
    case ClosedFormId::TYPE_I_ELL_EVAL: {
        require(spec.m == 0, "evaluation needs m = 0");
        std::vector<Cplx> ps{spec.p, spec.q};
        LogC val = LogC::one();
        for (size_t r = 0; r < spec.u.size(); ++r)
            for (size_t s = r + 1; s < spec.u.size(); ++s)
                val = val * gamma_e_log(spec.u[r] * spec.u[s], ps);
        return val;
    }
    case ClosedFormId::TYPE_II_ELL_EVAL: {
        require(spec.m == 0, "evaluation needs m = 0");
        std::vector<Cplx> ps{spec.p, spec.q};
        LogC val = LogC::one();
        Cplx tp{Real(1)};
        for (int i = 0; i < spec.n; ++i) {
            val = val * gamma_e_log(tp * spec.t, ps);
            for (size_t r = 0; r < spec.u.size(); ++r)
                for (size_t s = r + 1; s < spec.u.size(); ++s)
                    val = val * gamma_e_log(tp * spec.u[r] * spec.u[s], ps);
            tp = tp * spec.t;
        }
        return val;
    }
    case ClosedFormId::TYPE_I_HYP_EVAL: {
        require(spec.m == 0, "evaluation needs m = 0");
        LogC val = LogC::one();
        for (size_t r = 0; r < spec.mu.size(); ++r)
            for (size_t s = r + 1; s < spec.mu.size(); ++s)
                val = val * gamma_h_log(spec.mu[r] + spec.mu[s], spec.omega);
        return val;
    }
    case ClosedFormId::TYPE_II_HYP_EVAL: {
        require(spec.m == 0, "evaluation needs m = 0");
        LogC val = LogC::one();
        Cplx tp{};
        for (int i = 0; i < spec.n; ++i) {
            val = val * gamma_h_log(tp + spec.tau, spec.omega);
            for (size_t r = 0; r < spec.mu.size(); ++r)
                for (size_t s = r + 1; s < spec.mu.size(); ++s)
                    val = val * gamma_h_log(tp + spec.mu[r] + spec.mu[s], spec.omega);
            tp = tp + spec.tau;
        }
        return val;
    }
    case ClosedFormId::TRIG_IIC2_EVAL: {
        require(spec.m == 0, "evaluation needs m = 0");
        Cplx q = spec.q, t = spec.t;
        LogC val = LogC::one();
        Cplx tp{Real(1)};
        for (int i = 0; i < spec.n; ++i) {
            val = val * gamma_t_log(tp * t, q) *
                  gamma_t_log(tp * spec.v[0] * spec.v[1] / q, q);
            for (size_t r = 0; r < spec.u.size(); ++r)
                val = val * gamma_t_log(tp * spec.v[0] / spec.u[r], q) *
                      gamma_t_log(tp * spec.v[1] / spec.u[r], q);
            for (size_t r = 0; r < spec.u.size(); ++r)
                for (size_t s = r + 1; s < spec.u.size(); ++s)
                    val = val / gamma_t_log(spec.u[r] * spec.u[s] / tp, q);
            tp = tp * t;
        }
        return val;
    }
    case ClosedFormId::SELBERG: {
        const int n = spec.n;
        Real a0 = spec.pos_a[0], a1 = spec.pos_a[1], b = spec.pos_b[0];
        Cplx al0 = spec.alpha[0], al1 = spec.alpha[1], tau = spec.tau;
        Cplx nn{Real(n)}, nn1{Real(n) * Real(n - 1)};
        Cplx e_gap = nn1 * tau + nn * (al0 + al1) - nn;
        LogC val = lpow_c(lconst(log(abs(a0 - a1))), e_gap) /
                   (lpow_c(lconst(log(abs(a0 + b))), nn1 * tau + nn * al1) *
                    lpow_c(lconst(log(abs(a1 + b))), nn1 * tau + nn * al0));
        for (int i = 0; i < n; ++i) {
            Cplx it = Real(i) * tau;
            Cplx num = log_gamma(Real(i + 1) * tau) + log_gamma(it + al0) +
                       log_gamma(it + al1);
            Cplx den = log_gamma(Real(2 * (n - 1)) * tau + al0 + al1 - it) +
                       log_gamma(tau);
            val = val * LogC::from_log(num - den);
        }
        return val;
    }
    }
    throw std::invalid_argument("unknown closed form");
}

// ---------------------------------------------------------- transformations

namespace {

LogC eval_value(const IntegralSpec& spec, const Real& tol)
{
    return eval_integral(spec, tol).value;
}

} // namespace

PairResult transform_pair(TransformId id, const IntegralSpec& spec, const Real& tol,
                          int variant)
{
    switch (id) {
    case TransformId::TYPE_I_HYP_SWAP: {
        // I^{(m)}_{BC_n;h}(mu) = prod Gamma_h(mu_r + mu_s) *
        // I^{(n)}_{BC_m;h}((w1+w2)/2 - mu).
        PairResult pr;
        pr.lhs = eval_value(spec, tol);
        IntegralSpec dual = spec;
        std::swap(dual.n, dual.m);
        Cplx half = (spec.omega[0] + spec.omega[1]) / Real(2);
        for (auto& mr : dual.mu) mr = half - mr;
        LogC prod = LogC::one();
        for (size_t r = 0; r < spec.mu.size(); ++r)
            for (size_t s = r + 1; s < spec.mu.size(); ++s)
                prod = prod * gamma_h_log(spec.mu[r] + spec.mu[s], spec.omega);
        pr.rhs = prod * eval_value(dual, tol);
        return pr;
    }
    case TransformId::E7_INV: {
        // spec carries mu_0..mu_7 and tau at n = 1; the tilde function is the
        // Gamma_h^{(3)} pair-sum prefactor times II^{(1)} at tau/2 + mu.
        auto tilde = [&](const std::vector<Cplx>& mu) {
            std::vector<Cplx> om3{spec.tau, spec.omega[0], spec.omega[1]};
            LogC prod = LogC::one();
            for (size_t r = 0; r < mu.size(); ++r)
                for (size_t s = r + 1; s < mu.size(); ++s)
                    prod = prod * gamma_h_log(spec.tau + mu[r] + mu[s], om3);
            IntegralSpec ii = spec;
            ii.family = Family::TYPE_II_BC;
            ii.level = Level::HYPERBOLIC;
            ii.n = 1;
            ii.m = 1;
            ii.mu.clear();
            for (auto& mr : mu) ii.mu.push_back(spec.tau / Real(2) + mr);
            return prod * eval_value(ii, tol);
        };
        PairResult pr;
        pr.lhs = tilde(spec.mu);
        std::vector<Cplx> mu2 = spec.mu;
        if (variant == 0) {
            Cplx nu = (spec.mu[4] + spec.mu[5] + spec.mu[6] + spec.mu[7] -
                       spec.mu[0] - spec.mu[1] - spec.mu[2] - spec.mu[3]) /
                      Real(4);
            for (int r = 0; r < 4; ++r) mu2[r] = spec.mu[r] + nu;
            for (int r = 4; r < 8; ++r) mu2[r] = spec.mu[r] - nu;
        } else if (variant == 1) {
            Cplx nu = (spec.mu[0] + spec.mu[1] + spec.mu[2] + spec.mu[3]) / Real(2);
            Cplx nup = (spec.mu[4] + spec.mu[5] + spec.mu[6] + spec.mu[7]) / Real(2);
            for (int r = 0; r < 4; ++r) mu2[r] = nu - spec.mu[r];
            for (int r = 4; r < 8; ++r) mu2[r] = nup - spec.mu[r];
        } else {
            Cplx nu{};
            for (auto& mr : spec.mu) nu = nu + mr;
            nu = nu / Real(4);
            for (int r = 0; r < 8; ++r) mu2[r] = nu - spec.mu[r];
        }
        pr.rhs = tilde(mu2);
        return pr;
    }
    case TransformId::TRIG_IC12: {
        // spec is the direct type I trig spec.
        PairResult pr;
        pr.lhs = eval_value(spec, tol);
        LogC prod = LogC::one();
        Cplx q = spec.q;
        for (size_t r = 0; r < spec.u.size(); ++r)
            for (size_t s = r + 1; s < spec.u.size(); ++s)
                prod = prod * gamma_t_log(spec.u[r] * spec.u[s], q);
        for (auto& ur : spec.u)
            for (auto& vs : spec.v) prod = prod / gamma_t_log(vs / ur, q);
        for (size_t r = 0; r < spec.v.size(); ++r)
            for (size_t s = r + 1; s < spec.v.size(); ++s)
                prod = prod / gamma_t_log(spec.v[r] * spec.v[s] / q, q);
        IntegralSpec broken = spec;
        broken.level = Level::TRIG_BROKEN;
        pr.rhs = prod * eval_value(broken, tol);
        return pr;
    }
    case TransformId::TRIG_IC3_INVOL: {
        PairResult pr;
        if (variant == 0) {
            pr.lhs = eval_value(spec, tol);
            IntegralSpec other = spec;
            other.w = spec.w * Cplx{Real(113) / 100} * e_of(Cplx{Real(37) / 100});
            pr.rhs = eval_value(other, tol);
            return pr;
        }
        Cplx q = spec.q;
        LogC prodl = LogC::one();
        for (auto& tr : spec.tv)
            for (auto& us : spec.u) prodl = prodl / gamma_t_log(tr / us, q);
        pr.lhs = prodl * eval_value(spec, tol);
        IntegralSpec dual = spec;
        std::swap(dual.n, dual.m);
        dual.tv = spec.v;
        dual.u.clear();
        for (auto& ur : spec.u) dual.u.push_back(Cplx{Real(1)} / ur);
        dual.v = spec.tv;
        LogC prodr = LogC::one();
        for (auto& tr : dual.tv)
            for (auto& us : dual.u) prodr = prodr / gamma_t_log(tr / us, q);
        pr.rhs = prodr * eval_value(dual, tol);
        return pr;
    }
    case TransformId::TRIG_IIC_M1: {
        // spec is the direct type II trig spec at m = 1.
        require(spec.m == 1, "transformation stated for m = 1");
        PairResult pr;
        pr.lhs = eval_value(spec, tol);
        Cplx q = spec.q, t = spec.t;
        LogC prod = LogC::one();
        Cplx tp{Real(1)};
        for (int i = 0; i < spec.n; ++i) {
            for (size_t r = 0; r < spec.u.size(); ++r)
                for (size_t s = r + 1; s < spec.u.size(); ++s)
                    prod = prod * gamma_t_log(tp * spec.u[r] * spec.u[s], q);
            for (auto& ur : spec.u)
                prod = prod / (gamma_t_log(spec.v[0] / (tp * ur), q) *
                               gamma_t_log(spec.v[1] / (tp * ur), q));
            prod = prod / gamma_t_log(spec.v[0] * spec.v[1] / (tp * q), q);
            tp = tp * t;
        }
        IntegralSpec broken = spec;
        broken.level = Level::TRIG_BROKEN;
        Cplx scale = cpow(t, Cplx{Real(spec.n - 1) / 2});
        for (auto& ur : broken.u) ur = ur * scale;
        for (auto& vr : broken.v) vr = vr / scale;
        pr.rhs = prod * eval_value(broken, tol);
        return pr;
    }
    case TransformId::RAT_IC12: {
        PairResult pr;
        pr.lhs = eval_value(spec, tol);
        Cplx om = spec.omega[0];
        LogC prod = LogC::one();
        for (size_t r = 0; r < spec.mu.size(); ++r)
            for (size_t s = r + 1; s < spec.mu.size(); ++s)
                prod = prod * gamma_r_log(spec.mu[r] + spec.mu[s], om);
        for (auto& mr : spec.mu)
            for (auto& ns : spec.nu) prod = prod / gamma_r_log(ns - mr, om);
        for (size_t r = 0; r < spec.nu.size(); ++r)
            for (size_t s = r + 1; s < spec.nu.size(); ++s)
                prod = prod / gamma_r_log(spec.nu[r] + spec.nu[s] - om, om);
        IntegralSpec broken = spec;
        broken.level = Level::RATIONAL_BROKEN;
        pr.rhs = prod * eval_value(broken, tol);
        return pr;
    }
    case TransformId::CLASSICAL_DIXON: {
        // spec holds a-points/alpha and b-points/beta; both sides are the
        // prefactored ordered-interval integrals.
        auto side = [&](const std::vector<Real>& a, const std::vector<Real>& b,
                        const std::vector<Cplx>& al, const std::vector<Cplx>& be) {
            IntegralSpec s;
            s.family = Family::TYPE_I_BC;
            s.level = Level::CLASSICAL;
            s.n = static_cast<int>(a.size()) - 1;
            s.m = static_cast<int>(b.size()) - 1;
            s.cl_p = Real(0);
            s.pos_a = a;
            s.pos_b = b;
            s.alpha = al;
            s.beta = be;
            LogC pref = LogC::one();
            for (size_t i = 0; i < a.size(); ++i)
                for (size_t j = i + 1; j < a.size(); ++j)
                    pref = pref * lpow_c(lconst(log(abs(a[i] - a[j]))),
                                         Cplx{Real(1)} - al[i] - al[j]);
            for (size_t i = 0; i < a.size(); ++i) {
                pref = pref / LogC::from_log(log_gamma(al[i]));
                for (size_t j = 0; j < b.size(); ++j)
                    pref = pref / lpow_c(lconst(log(abs(a[i] + b[j]))), al[i]);
            }
            return pref * eval_value(s, tol);
        };
        PairResult pr;
        pr.lhs = side(spec.pos_a, spec.pos_b, spec.alpha, spec.beta);
        // The mirrored side runs over [b_{i-1}, b_i] with roles swapped; the
        // b points are already ascending on the positive axis.
        pr.rhs = side(spec.pos_b, spec.pos_a, spec.beta, spec.alpha);
        return pr;
    }
    case TransformId::CLASSICAL_SELBERG_TRANS: {
        const int n = spec.n;
        Cplx tau = spec.tau;
        auto side = [&](const std::vector<Real>& a, const std::vector<Real>& b,
                        const std::vector<Cplx>& al, const std::vector<Cplx>& be) {
            IntegralSpec s;
            s.family = Family::TYPE_II_BC;
            s.level = Level::CLASSICAL;
            s.n = n;
            s.cl_p = Real(0);
            s.pos_a = a;
            s.pos_b = b;
            s.alpha = al;
            s.beta = be;
            s.tau = tau;
            return eval_value(s, tol);
        };
        PairResult pr;
        pr.lhs = side(spec.pos_a, spec.pos_b, spec.alpha, spec.beta);
        LogC C = LogC::one();
        Real a0 = spec.pos_a[0], a1 = spec.pos_a[1];
        Real b0 = spec.pos_b[0], b1 = spec.pos_b[1];
        Cplx al0 = spec.alpha[0], al1 = spec.alpha[1];
        Cplx be0 = spec.beta[0], be1 = spec.beta[1];
        for (int i = 0; i < n; ++i) {
            Cplx it = Real(i) * tau;
            C = C * lpow_c(lconst(log(abs(a0 + b0))), al0 - be0) *
                lpow_c(lconst(log(abs(a0 + b1))), al0 - be1) *
                lpow_c(lconst(log(abs(a1 + b0))), al1 - be0) *
                lpow_c(lconst(log(abs(a1 + b1))), al1 - be1);
            C = C / lpow_c(lconst(log(abs(a0 - a1))),
                           Cplx{Real(1)} - Real(n - 1) * tau - al0 - al1);
            C = C / lpow_c(lconst(log(abs(b0 - b1))),
                           Cplx{Real(-1)} + Real(n - 1) * tau + be0 + be1);
            C = C * LogC::from_log(log_gamma(it + al0) + log_gamma(it + al1) -
                                   log_gamma(it + be0) - log_gamma(it + be1));
        }
        std::vector<Real> swap_b{b0, b1};
        pr.rhs = C * side(swap_b, {a0, a1}, {be0, be1}, {al0, al1});
        return pr;
    }
    }
    throw std::invalid_argument("unknown transformation");
}

// ------------------------------------------------------------- limit pairs

namespace {

std::mutex cache_mutex;
std::map<std::string, LogC> rhs_cache;

std::string cache_key(LimitId id, const IntegralSpec& spec)
{
    std::ostringstream os;
    os.precision(30);
    os << static_cast<int>(id) << '|' << static_cast<int>(spec.family) << '|'
       << spec.n << '|' << spec.m << '|';
    auto put = [&](const Cplx& z) {
        os << static_cast<double>(z.re) << ',' << static_cast<double>(z.im) << ';';
    };
    for (auto& z : spec.u) put(z);
    for (auto& z : spec.v) put(z);
    for (auto& z : spec.tv) put(z);
    for (auto& z : spec.mu) put(z);
    for (auto& z : spec.nu) put(z);
    for (auto& z : spec.omega) put(z);
    for (auto& z : spec.alpha) put(z);
    for (auto& z : spec.beta) put(z);
    for (auto& r : spec.pos_a) os << static_cast<double>(r) << ';';
    for (auto& r : spec.pos_b) os << static_cast<double>(r) << ';';
    put(spec.p);
    put(spec.q);
    put(spec.t);
    put(spec.tau);
    put(spec.w);
    put(spec.Z);
    os << static_cast<double>(spec.cl_p);
    return os.str();
}

// Elliptic bases at scale v for the hyperbolic and rational limits.
Cplx ev(const Real& v, const Cplx& x) { return e_of(Cplx{v * x.re, v * x.im}); }

// The finite-parameter (lhs) spec for a limit at scale v; for the trig
// limits v plays the role of p.
IntegralSpec lhs_spec(LimitId id, const Real& v, const IntegralSpec& spec)
{
    IntegralSpec L;
    L.level = Level::ELLIPTIC;
    switch (id) {
    case LimitId::HYP_IC: {
        L.family = Family::TYPE_I_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = ev(v, spec.omega[0]);
        L.q = ev(v, spec.omega[1]);
        for (auto& mr : spec.mu) L.u.push_back(ev(v, mr));
        return L;
    }
    case LimitId::HYP_IIC: {
        L.family = Family::TYPE_II_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = ev(v, spec.omega[0]);
        L.q = ev(v, spec.omega[1]);
        L.t = ev(v, spec.tau);
        for (auto& mr : spec.mu) L.u.push_back(ev(v, mr));
        return L;
    }
    case LimitId::HYP_A: {
        L.family = Family::TYPE_A;
        L.n = spec.n;
        L.m = spec.m;
        L.p = ev(v, spec.omega[0]);
        L.q = ev(v, spec.omega[1]);
        for (auto& mr : spec.mu) L.u.push_back(ev(v, mr));
        for (auto& nr : spec.nu) L.v.push_back(ev(v, nr));
        return L;
    }
    case LimitId::TRIG_IC1: {
        L.family = Family::TYPE_I_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = Cplx{v};
        L.q = spec.q;
        L.u = spec.u;
        for (auto& vr : spec.v) L.u.push_back(L.p * spec.q / vr);
        return L;
    }
    case LimitId::TRIG_IC2: {
        L.family = Family::TYPE_I_BC;
        L.n = spec.m;
        L.m = spec.n;
        L.p = Cplx{v};
        L.q = spec.q;
        Cplx rt = csqrt(L.p * spec.q);
        for (auto& ur : spec.u) L.u.push_back(rt / ur);
        for (auto& vr : spec.v) L.u.push_back(vr / rt);
        return L;
    }
    case LimitId::TRIG_IC3: {
        L.family = Family::TYPE_I_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = Cplx{v};
        L.q = spec.q;
        Cplx rt4 = csqrt(csqrt(L.p * spec.q));
        for (auto& tr : spec.tv) L.u.push_back(tr / rt4);
        for (auto& ur : spec.u) L.u.push_back(rt4 / ur);
        for (auto& vr : spec.v) L.u.push_back(rt4 * rt4 * rt4 / vr);
        return L;
    }
    case LimitId::TRIG_IIC1: {
        L.family = Family::TYPE_II_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = Cplx{v};
        L.q = spec.q;
        L.t = spec.t;
        L.u = spec.u;
        for (auto& vr : spec.v) L.u.push_back(L.p * spec.q / vr);
        return L;
    }
    case LimitId::TRIG_IIC2: {
        L.family = Family::TYPE_II_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = Cplx{v};
        L.q = spec.q;
        L.t = spec.t;
        Cplx rt = csqrt(L.p * spec.q);
        L.u.push_back(spec.v[0] / rt);
        L.u.push_back(spec.v[1] / rt);
        for (auto& ur : spec.u) L.u.push_back(rt / ur);
        return L;
    }
    case LimitId::TRIG_IIC_NONSYM: {
        L.family = Family::TYPE_II_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = Cplx{v};
        L.q = spec.q;
        L.t = spec.t;
        Cplx rt4 = csqrt(csqrt(L.p));
        L.u.push_back(spec.tv[0] / rt4);
        L.u.push_back(spec.tv[1] / rt4);
        for (auto& ur : spec.u) L.u.push_back(rt4 / ur);
        for (auto& vr : spec.v)
            L.u.push_back(rt4 * rt4 * rt4 * spec.q / vr);
        return L;
    }
    case LimitId::RAT_IC1: {
        L.family = Family::TYPE_I_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = spec.p;
        L.q = ev(v, spec.omega[0]);
        for (auto& mr : spec.mu) L.u.push_back(ev(v, mr));
        for (auto& nr : spec.nu)
            L.u.push_back(spec.p * ev(v, spec.omega[0] - nr));
        return L;
    }
    case LimitId::RAT_IC2: {
        L.family = Family::TYPE_I_BC;
        L.n = spec.m;
        L.m = spec.n;
        L.p = spec.p;
        L.q = ev(v, spec.omega[0]);
        Cplx rp = csqrt(spec.p);
        Cplx half = spec.omega[0] / Real(2);
        for (auto& mr : spec.mu) L.u.push_back(rp * ev(v, half - mr));
        for (auto& nr : spec.nu) L.u.push_back(ev(v, nr - half) / rp);
        return L;
    }
    case LimitId::RAT_IIC: {
        L.family = Family::TYPE_II_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = spec.p;
        L.q = ev(v, spec.omega[0]);
        L.t = ev(v, spec.tau);
        for (auto& mr : spec.mu) L.u.push_back(ev(v, mr));
        for (auto& nr : spec.nu)
            L.u.push_back(spec.p * ev(v, spec.omega[0] - nr));
        return L;
    }
    case LimitId::RAT_IIC_NONSYM: {
        L.family = Family::TYPE_II_BC;
        L.n = spec.n;
        L.m = spec.m;
        L.p = spec.p;
        L.q = ev(v, spec.omega[0]);
        L.t = ev(v, spec.tau);
        Cplx rp = csqrt(spec.p);
        Cplx half = spec.omega[0] / Real(2);
        for (auto& nr : spec.nu) L.u.push_back(ev(v, nr - half) / rp);
        for (auto& mr : spec.mu) L.u.push_back(rp * ev(v, half - mr));
        return L;
    }
    case LimitId::CLASS_IC:
    case LimitId::CLASS_SELBERG:
    case LimitId::CLASS_A: {
        L.p = Cplx{spec.cl_p};
        L.q = ev(v, spec.omega[0]);
        L.n = spec.n;
        L.m = spec.m;
        Cplx q = L.q;
        auto qp = [&](const Cplx& k) { return cpow(q, k); };
        if (id == LimitId::CLASS_A) {
            L.family = Family::TYPE_A;
            L.Z = spec.Z;
            for (size_t r = 0; r * 2 < spec.alpha.size(); ++r) {
                Cplx ar = e_of(Cplx{spec.pos_a[r]});
                L.u.push_back(qp(spec.alpha[2 * r + 1]) / ar);
                L.v.push_back(qp(spec.alpha[2 * r]) * ar);
            }
            Cplx rp = csqrt(Cplx{spec.cl_p});
            for (size_t r = 0; r * 2 < spec.beta.size(); ++r) {
                Cplx br = e_of(Cplx{spec.pos_b[r]});
                L.u.push_back(rp * qp(Cplx{Real(1) / 2} - spec.beta[2 * r + 1]) * br);
                L.v.push_back(rp * qp(Cplx{Real(1) / 2} - spec.beta[2 * r]) / br);
            }
            return L;
        }
        L.family = id == LimitId::CLASS_IC ? Family::TYPE_I_BC : Family::TYPE_II_BC;
        if (id == LimitId::CLASS_SELBERG) L.t = qp(spec.tau);
        for (size_t r = 0; r * 2 < spec.alpha.size(); ++r) {
            Cplx ar = e_of(Cplx{spec.pos_a[r]});
            L.u.push_back(qp(spec.alpha[2 * r]) * ar);
            L.u.push_back(qp(spec.alpha[2 * r + 1]) / ar);
        }
        Cplx rp = csqrt(Cplx{spec.cl_p});
        for (size_t r = 0; r * 2 < spec.beta.size(); ++r) {
            Cplx br = e_of(Cplx{spec.pos_b[r]});
            L.u.push_back(rp * qp(Cplx{Real(1) / 2} - spec.beta[2 * r]) / br);
            L.u.push_back(rp * qp(Cplx{Real(1) / 2} - spec.beta[2 * r + 1]) * br);
        }
        return L;
    }
    }
    throw std::invalid_argument("unknown limit");
}

// Parameter-dependent product multiplying the rhs integral for the
// classical limits.
LogC class_rhs_product(LimitId id, const IntegralSpec& spec)
{
    Cplx p{spec.cl_p};
    std::vector<Cplx> al;
    for (size_t r = 0; r * 2 < spec.alpha.size(); ++r)
        al.push_back(spec.alpha[2 * r] + spec.alpha[2 * r + 1]);
    Cplx asum{};
    for (auto& a : al) asum = asum + a;
    LogC val = LogC::one();
    if (id == LimitId::CLASS_IC) {
        for (size_t r = 0; r < al.size(); ++r)
            for (size_t s = r + 1; s < al.size(); ++s) {
                Cplx ar = e_of(Cplx{spec.pos_a[r]}), as = e_of(Cplx{spec.pos_a[s]});
                Real l = theta_log(ar * as, p).log_abs + theta_log(ar / as, p).log_abs;
                Cplx k = Cplx{Real(1)} - al[r] - al[s];
                val = val * LogC{k.re * l, k.im * l};
            }
    } else if (id == LimitId::CLASS_SELBERG) {
        const int n = spec.n;
        Cplx ar = e_of(Cplx{spec.pos_a[0]}), as = e_of(Cplx{spec.pos_a[1]});
        Real l = theta_log(ar * as, p).log_abs + theta_log(ar / as, p).log_abs;
        Cplx k = Cplx{Real(n)} - Real(n * (n - 1)) * spec.tau - Real(n) * (al[0] + al[1]);
        val = val * LogC{k.re * l, k.im * l};
        for (int i = 0; i < n; ++i) {
            Cplx it = Real(i) * spec.tau;
            Cplx num = log_gamma(Real(2 * (n - 1)) * spec.tau + al[0] + al[1] - it) +
                       log_gamma(spec.tau);
            Cplx den = log_gamma(Real(i + 1) * spec.tau) + log_gamma(it + al[0]) +
                       log_gamma(it + al[1]);
            val = val * LogC::from_log(num - den);
        }
        return val;
    } else {
        for (size_t r = 0; r < al.size(); ++r)
            for (size_t s = r + 1; s < al.size(); ++s) {
                Cplx ar = e_of(Cplx{spec.pos_a[r]}), as = e_of(Cplx{spec.pos_a[s]});
                Real l = theta_log(as / ar, p).log_abs;
                Cplx k = Cplx{Real(1)} - al[r] - al[s];
                val = val * LogC{k.re * l, k.im * l};
            }
        Cplx aprod{Real(1)};
        for (auto& t : spec.pos_a) aprod = aprod * e_of(Cplx{t});
        Real l = theta_log(spec.Z / aprod, p).log_abs;
        Cplx k = Cplx{Real(1)} - asum;
        val = val * LogC{k.re * l, k.im * l};
    }
    Cplx g = log_gamma(asum);
    for (auto& a : al) g = g - log_gamma(a);
    return val * LogC::from_log(g);
}

} // namespace

LogC limit_prefactor(LimitId id, const Real& v, const IntegralSpec& spec)
{
    switch (id) {
    case LimitId::HYP_IC: {
        std::vector<Cplx> vo{v * spec.omega[0], v * spec.omega[1]};
        Cplx s{};
        for (auto& mr : spec.mu) s = s - Real(2 * spec.n) * R_poly(v * mr, vo);
        s = s + Real(2 * spec.n * spec.n + spec.n) * R_poly(Cplx{}, vo);
        return le(s);
    }
    case LimitId::HYP_IIC: {
        std::vector<Cplx> vo{v * spec.omega[0], v * spec.omega[1]};
        Cplx s{};
        for (auto& mr : spec.mu) s = s - Real(2 * spec.n) * R_poly(v * mr, vo);
        s = s + Real(2 * spec.n * spec.n + spec.n) * R_poly(Cplx{}, vo);
        s = s - Real(2 * spec.n * spec.n - spec.n) * R_poly(v * spec.tau, vo);
        return le(s);
    }
    case LimitId::HYP_A: {
        std::vector<Cplx> vo{v * spec.omega[0], v * spec.omega[1]};
        Cplx s{};
        for (auto& mr : spec.mu) s = s - Real(spec.n + 1) * R_poly(v * mr, vo);
        for (auto& nr : spec.nu) s = s - Real(spec.n + 1) * R_poly(v * nr, vo);
        s = s + Real(spec.n * spec.n + 2 * spec.n) * R_poly(Cplx{}, vo);
        return le(s);
    }
    case LimitId::TRIG_IC1:
    case LimitId::TRIG_IIC1:
        return LogC::one();
    case LimitId::TRIG_IC2: {
        Cplx pq = Cplx{v} * spec.q;
        LogC pref = LogC::one();
        for (size_t r = 0; r < spec.v.size(); ++r)
            for (size_t s = r + 1; s < spec.v.size(); ++s)
                pref = pref * theta_log(spec.v[r] * spec.v[s] / pq, spec.q);
        return pref;
    }
    case LimitId::TRIG_IC3: {
        Cplx rt = csqrt(Cplx{v} * spec.q);
        LogC pref = LogC::one();
        for (size_t r = 0; r < spec.tv.size(); ++r)
            for (size_t s = r + 1; s < spec.tv.size(); ++s)
                pref = pref * theta_log(spec.tv[r] * spec.tv[s] / rt, spec.q);
        return pref;
    }
    case LimitId::TRIG_IIC2: {
        Cplx pq = Cplx{v} * spec.q;
        LogC pref = LogC::one();
        Cplx tp{Real(1)};
        for (int i = 0; i < spec.n; ++i) {
            pref = pref * theta_log(tp * spec.v[0] * spec.v[1] / pq, spec.q);
            tp = tp * spec.t;
        }
        return pref;
    }
    case LimitId::TRIG_IIC_NONSYM: {
        Cplx rp = csqrt(Cplx{v});
        LogC pref = LogC::one();
        Cplx tp{Real(1)};
        for (int i = 0; i < spec.n; ++i) {
            pref = pref * theta_log(tp * spec.tv[0] * spec.tv[1] / rp, spec.q);
            tp = tp * spec.t;
        }
        return pref;
    }
    case LimitId::RAT_IC1:
    case LimitId::RAT_IC2:
    case LimitId::RAT_IIC:
    case LimitId::RAT_IIC_NONSYM: {
        Cplx om = spec.omega[0];
        LogC pp = qpoch_log(spec.p, spec.p);
        // (p;p) sqrt(2 pi v omega / i), principal branch.
        LogC base = pp * LogC::from_log(clog(csqrt(Real(2) * pi() * v * om / iunit())));
        const int n = spec.n, m = spec.m;
        LogC pref;
        if (id == LimitId::RAT_IC1) {
            pref = le(-Cplx{Real(n * (2 * n + 3))} / (Real(24) * v * om)) *
                   lpow_int(base, n * (2 * n + 3));
        } else if (id == LimitId::RAT_IC2) {
            pref = le(-Cplx{Real(m * m + 2 * m)} / (Real(24) * v * om)) *
                   lpow_int(base, 2 * m * m + 3 * m);
            for (size_t r = 0; r < spec.nu.size(); ++r)
                for (size_t s = r + 1; s < spec.nu.size(); ++s)
                    pref = pref *
                           theta_log(ev(v, spec.nu[r] + spec.nu[s] - om) / spec.p,
                                     ev(v, om));
        } else {
            Cplx kappa = Real(2 * n * (2 * n - 3)) * spec.tau / om + Cplx{Real(6 * n)};
            pref = le(-Cplx{Real(n)} / (Real(4) * v * om)) * lpow_c(base, kappa);
            if (id == LimitId::RAT_IIC_NONSYM) {
                Cplx tp{};
                for (int i = 0; i < n; ++i) {
                    pref = pref * theta_log(ev(v, tp + spec.nu[0] + spec.nu[1] - om) /
                                                spec.p,
                                            ev(v, om));
                    tp = tp + spec.tau;
                }
            }
        }
        return pref;
    }
    case LimitId::CLASS_IC:
    case LimitId::CLASS_SELBERG:
    case LimitId::CLASS_A: {
        Cplx q = ev(v, spec.omega[0]);
        std::vector<Cplx> ps{Cplx{spec.cl_p}, q};
        auto qp = [&](const Cplx& k) { return cpow(q, k); };
        std::vector<Cplx> al;
        for (size_t r = 0; r * 2 < spec.alpha.size(); ++r)
            al.push_back(spec.alpha[2 * r] + spec.alpha[2 * r + 1]);
        Cplx asum{};
        for (auto& a : al) asum = asum + a;
        LogC pref = gamma_e_log(qp(asum), ps);
        if (id == LimitId::CLASS_IC) {
            for (size_t r = 0; r < al.size(); ++r) pref = pref / gamma_e_log(qp(al[r]), ps);
            for (size_t r = 0; r < al.size(); ++r)
                for (size_t s = r + 1; s < al.size(); ++s) {
                    Cplx ar = e_of(Cplx{spec.pos_a[r]}), as = e_of(Cplx{spec.pos_a[s]});
                    Cplx app = spec.alpha[2 * r], apm = spec.alpha[2 * r + 1];
                    Cplx bpp = spec.alpha[2 * s], bpm = spec.alpha[2 * s + 1];
                    pref = pref / (gamma_e_log(qp(app + bpp) * ar * as, ps) *
                                   gamma_e_log(qp(app + bpm) * ar / as, ps) *
                                   gamma_e_log(qp(apm + bpp) * as / ar, ps) *
                                   gamma_e_log(qp(apm + bpm) / (ar * as), ps));
                }
        } else if (id == LimitId::CLASS_SELBERG) {
            const int n = spec.n;
            pref = LogC::one();
            Cplx ar = e_of(Cplx{spec.pos_a[0]}), as = e_of(Cplx{spec.pos_a[1]});
            Cplx app = spec.alpha[0], apm = spec.alpha[1];
            Cplx bpp = spec.alpha[2], bpm = spec.alpha[3];
            for (int i = 0; i < n; ++i) {
                Cplx it = Real(i) * spec.tau;
                pref = pref *
                       gamma_e_log(qp(Real(2 * (n - 1)) * spec.tau + al[0] + al[1] - it),
                                   ps);
                pref = pref / (gamma_e_log(qp(Real(i + 1) * spec.tau), ps) *
                               gamma_e_log(qp(it + al[0]), ps) *
                               gamma_e_log(qp(it + al[1]), ps) *
                               gamma_e_log(qp(it + app + bpp) * ar * as, ps) *
                               gamma_e_log(qp(it + app + bpm) * ar / as, ps) *
                               gamma_e_log(qp(it + apm + bpp) * as / ar, ps) *
                               gamma_e_log(qp(it + apm + bpm) / (ar * as), ps));
            }
        } else {
            std::vector<Cplx> av;
            for (auto& t : spec.pos_a) av.push_back(e_of(Cplx{t}));
            for (size_t r = 0; r < al.size(); ++r)
                for (size_t s = 0; s < al.size(); ++s)
                    pref = pref / gamma_e_log(qp(spec.alpha[2 * r + 1] +
                                                 spec.alpha[2 * s]) *
                                                  av[s] / av[r],
                                              ps);
            Cplx aprod{Real(1)};
            for (auto& a : av) aprod = aprod * a;
            Cplx mins{}, plus{};
            for (size_t r = 0; r < al.size(); ++r) {
                mins = mins + spec.alpha[2 * r + 1];
                plus = plus + spec.alpha[2 * r];
            }
            pref = pref / (gamma_e_log(qp(mins) * spec.Z / aprod, ps) *
                           gamma_e_log(qp(plus) * aprod / spec.Z, ps));
        }
        return pref;
    }
    }
    throw std::invalid_argument("unknown limit");
}

PairResult limit_pair(LimitId id, const Real& v, const IntegralSpec& spec,
                      const Real& tol)
{
    PairResult pr;
    pr.lhs = limit_prefactor(id, v, spec) * eval_value(lhs_spec(id, v, spec), tol);

    std::string key = cache_key(id, spec);
    {
        std::lock_guard<std::mutex> lk(cache_mutex);
        auto it = rhs_cache.find(key);
        if (it != rhs_cache.end()) {
            pr.rhs = it->second;
            return pr;
        }
    }
    LogC rhs = eval_value(spec, tol);
    if (id == LimitId::CLASS_IC || id == LimitId::CLASS_SELBERG ||
        id == LimitId::CLASS_A)
        rhs = class_rhs_product(id, spec) * rhs;
    std::lock_guard<std::mutex> lk(cache_mutex);
    rhs_cache.emplace(key, rhs);
    pr.rhs = rhs;
    return pr;
}

void clear_limit_cache()
{
    std::lock_guard<std::mutex> lk(cache_mutex);
    rhs_cache.clear();
}

// ------------------------------------------------------------ seeded specs

namespace {

// Multiplicative parameters with prod = exp(log_target): fixed moduli bands
// with centered jitter in log space.
std::vector<Cplx> mult_params(int k, const Cplx& log_target, const Real& jitter,
                              CounterRng& rng)
{
    std::vector<Cplx> d(k);
    Cplx mean{};
    for (auto& dr : d) {
        dr = Cplx{rng.next_real(-jitter, jitter), rng.next_real(-jitter, jitter)};
        mean = mean + dr;
    }
    mean = mean / Real(k);
    std::vector<Cplx> out;
    for (auto& dr : d) out.push_back(cexp(log_target / Real(k) + dr - mean));
    return out;
}

// Additive parameters with sum = target.
std::vector<Cplx> add_params(int k, const Cplx& target, const Real& jitter,
                             CounterRng& rng)
{
    std::vector<Cplx> d(k);
    Cplx mean{};
    for (auto& dr : d) {
        dr = Cplx{rng.next_real(-jitter, jitter), rng.next_real(-jitter, jitter)};
        mean = mean + dr;
    }
    mean = mean / Real(k);
    std::vector<Cplx> out;
    for (auto& dr : d) out.push_back(target / Real(k) + dr - mean);
    return out;
}

} // namespace

IntegralSpec seed_spec(SpecKind kind, int n, int m, uint64_t seed)
{
    CounterRng rng(seed, static_cast<uint64_t>(kind) * 1000 + n * 10 + m);
    IntegralSpec s;
    s.n = n;
    s.m = m;
    switch (kind) {
    case SpecKind::ELL_I:
    case SpecKind::ELL_II: {
        s.level = Level::ELLIPTIC;
        s.p = Cplx{Real(15) / 100};
        s.q = Cplx{Real(2) / 10};
        Cplx lpq = clog(s.p) + clog(s.q);
        if (kind == SpecKind::ELL_I) {
            s.family = Family::TYPE_I_BC;
            s.u = mult_params(2 * m + 2 * n + 4, Real(m + 1) * lpq, Real(2) / 10, rng);
        } else {
            s.family = Family::TYPE_II_BC;
            s.t = Real(35) / 100 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
            Cplx lt = clog(s.t);
            s.u = mult_params(2 * m + 6, Real(m + 1) * lpq - Real(2 * n - 2) * lt,
                              Real(15) / 100, rng);
        }
        return s;
    }
    case SpecKind::ELL_A: {
        s.family = Family::TYPE_A;
        s.level = Level::ELLIPTIC;
        s.p = Cplx{Real(15) / 100};
        s.q = Cplx{Real(2) / 10};
        Cplx lpq = clog(s.p) + clog(s.q);
        auto uv = mult_params(2 * (m + n + 2), Real(m + 1) * lpq, Real(2) / 10, rng);
        s.u.assign(uv.begin(), uv.begin() + (m + n + 2));
        s.v.assign(uv.begin() + (m + n + 2), uv.end());
        return s;
    }
    case SpecKind::HYP_I:
    case SpecKind::HYP_II: {
        s.level = Level::HYPERBOLIC;
        s.omega = {Cplx{Real(0), Real(1)}, Cplx{Real(6) / 10, Real(8) / 10}};
        Cplx osum = s.omega[0] + s.omega[1];
        if (kind == SpecKind::HYP_I) {
            s.family = Family::TYPE_I_BC;
            s.mu = add_params(2 * m + 2 * n + 4, Real(m + 1) * osum, Real(12) / 100, rng);
        } else {
            s.family = Family::TYPE_II_BC;
            s.tau = Cplx{rng.next_real(Real(-1) / 10, Real(1) / 10),
                         rng.next_real(Real(25) / 100, Real(4) / 10)};
            s.mu = add_params(2 * m + 6, Real(m + 1) * osum - Real(2 * n - 2) * s.tau,
                              Real(12) / 100, rng);
        }
        return s;
    }
    case SpecKind::HYP_A: {
        s.family = Family::TYPE_A;
        s.level = Level::HYPERBOLIC;
        s.omega = {Cplx{Real(0), Real(1)}, Cplx{Real(6) / 10, Real(8) / 10}};
        Cplx osum = s.omega[0] + s.omega[1];
        auto mn = add_params(2 * (m + n + 2), Real(m + 1) * osum, Real(12) / 100, rng);
        s.mu.assign(mn.begin(), mn.begin() + (m + n + 2));
        s.nu.assign(mn.begin() + (m + n + 2), mn.end());
        return s;
    }
    case SpecKind::TRIG_IC1: {
        s.family = Family::TYPE_I_BC;
        s.level = Level::TRIG_DIRECT;
        s.q = Cplx{Real(3) / 10};
        // balancing prod u = prod v; |u_r| < 1 for the torus.
        s.v = mult_params(m + 1, Cplx{log(Real(3) / 10) * Real(m + 1)}, Real(15) / 100,
                          rng);
        Cplx lv{};
        for (auto& vr : s.v) lv = lv + clog(vr);
        s.u = mult_params(2 * n + m + 3, lv, Real(15) / 100, rng);
        s.w = Real(85) / 100 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        return s;
    }
    case SpecKind::TRIG_IIC1: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::TRIG_DIRECT;
        s.q = Cplx{Real(3) / 10};
        s.t = Real(4) / 10 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        s.v = mult_params(m + 1, Cplx{log(Real(3) / 10) * Real(m + 1)}, Real(15) / 100,
                          rng);
        Cplx lv{};
        for (auto& vr : s.v) lv = lv + clog(vr);
        s.u = mult_params(m + 5, lv - Real(2 * n - 2) * clog(s.t), Real(1) / 10, rng);
        s.w = Real(85) / 100 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        return s;
    }
    case SpecKind::TRIG_IC2: {
        // Broken type I, a = pq; u_r sit outside the contour, v_r inside and
        // small enough that the elliptic side stays on the unit torus.
        s.family = Family::TYPE_I_BC;
        s.level = Level::TRIG_BROKEN;
        s.q = Cplx{Real(3) / 10};
        s.v = mult_params(m + 1, Cplx{log(Real(2) / 100) * Real(m + 1)}, Real(1) / 10,
                          rng);
        Cplx lv{};
        for (auto& vr : s.v) lv = lv + clog(vr);
        s.u = mult_params(2 * n + m + 3, lv, Real(1) / 10, rng);
        s.w = Real(85) / 100 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        return s;
    }
    case SpecKind::TRIG_IC3: {
        s.family = Family::TYPE_I_BC;
        s.level = Level::TRIG_BROKEN;
        s.q = Cplx{Real(3) / 10};
        s.tv = mult_params(n + 1, Cplx{log(Real(2) / 10) * Real(n + 1)}, Real(1) / 10,
                           rng);
        s.v = mult_params(m + 1, Cplx{log(Real(45) / 100) * Real(m + 1)}, Real(1) / 10,
                          rng);
        Cplx lt{}, lv{};
        for (auto& tr : s.tv) lt = lt + clog(tr);
        for (auto& vr : s.v) lv = lv + clog(vr);
        s.u = mult_params(n + m + 2, lt - lv, Real(8) / 100, rng);
        s.w = Real(9) / 10 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        return s;
    }
    case SpecKind::TRIG_IIC2: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::TRIG_BROKEN;
        s.q = Cplx{Real(3) / 10};
        s.t = Real(4) / 10 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        s.v = mult_params(2, Cplx{Real(2) * log(Real(6) / 100)}, Real(1) / 10, rng);
        Cplx lv = clog(s.v[0]) + clog(s.v[1]);
        s.u = mult_params(2 * m + 4, Real(2 * n - 2) * clog(s.t) + lv, Real(8) / 100,
                          rng);
        s.w = Real(75) / 100 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        return s;
    }
    case SpecKind::TRIG_IIC_NS: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::TRIG_BROKEN;
        s.q = Cplx{Real(3) / 10};
        s.t = Real(4) / 10 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        s.tv = mult_params(2, Cplx{Real(2) * log(Real(2) / 10)}, Real(1) / 10, rng);
        Cplx lt = clog(s.tv[0]) + clog(s.tv[1]);
        s.v = mult_params(m + 1, Cplx{log(Real(32) / 100) * Real(m + 1)}, Real(1) / 10,
                          rng);
        Cplx lv{};
        for (auto& vr : s.v) lv = lv + clog(vr);
        s.u = mult_params(m + 3, Real(2 * n - 2) * clog(s.t) + lt - lv, Real(8) / 100,
                          rng);
        s.w = Real(8) / 10 * e_of(Cplx{rng.next_real(Real(0), Real(1))});
        return s;
    }
    case SpecKind::RAT_IC1: {
        s.family = Family::TYPE_I_BC;
        s.level = Level::RATIONAL_DIRECT;
        s.omega = {Cplx{Real(3) / 10, Real(11) / 10}};
        s.p = Cplx{Real(15) / 100};
        s.nu = add_params(m + 1, Cplx{Real(0), Real(1)} * Real(m + 1), Real(15) / 100,
                          rng);
        for (auto& nr : s.nu) nr = nr + Cplx{rng.next_real(Real(-2) / 10, Real(2) / 10)};
        Cplx nsum{};
        for (auto& nr : s.nu) nsum = nsum + nr;
        s.mu = add_params(2 * n + m + 3, nsum, Real(12) / 100, rng);
        return s;
    }
    case SpecKind::RAT_IC2: {
        s.family = Family::TYPE_I_BC;
        s.level = Level::RATIONAL_BROKEN;
        s.omega = {Cplx{Real(2) / 10, Real(14) / 10}};
        // Large p keeps the sqrt(p)-scaled parameters inside the unit torus
        // down to moderately small v.
        s.p = Cplx{Real(6) / 10};
        // Im(nu) above Im(omega)/2, Im(mu) below it.
        s.nu = add_params(m + 1, Cplx{Real(0), Real(125) / 100} * Real(m + 1),
                          Real(8) / 100, rng);
        Cplx nsum{};
        for (auto& nr : s.nu) nsum = nsum + nr;
        s.mu = add_params(2 * n + m + 3, nsum, Real(8) / 100, rng);
        s.w = Cplx{rng.next_real(Real(1) / 10, Real(4) / 10),
                   rng.next_real(Real(-2) / 10, Real(-1) / 10)};
        return s;
    }
    case SpecKind::RAT_IIC: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::RATIONAL_DIRECT;
        s.omega = {Cplx{Real(3) / 10, Real(11) / 10}};
        s.p = Cplx{Real(15) / 100};
        s.tau = Cplx{rng.next_real(Real(-1) / 10, Real(1) / 10),
                     rng.next_real(Real(3) / 10, Real(5) / 10)};
        s.nu = add_params(m + 1, Cplx{Real(0), Real(1)} * Real(m + 1), Real(1) / 10,
                          rng);
        Cplx nsum{};
        for (auto& nr : s.nu) nsum = nsum + nr;
        s.mu = add_params(m + 5, nsum - Real(2 * n - 2) * s.tau, Real(1) / 10, rng);
        return s;
    }
    case SpecKind::RAT_IIC_NS: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::RATIONAL_BROKEN;
        s.omega = {Cplx{Real(2) / 10, Real(14) / 10}};
        s.p = Cplx{Real(6) / 10};
        s.tau = Cplx{rng.next_real(Real(-5) / 100, Real(5) / 100),
                     rng.next_real(Real(25) / 100, Real(35) / 100)};
        s.nu = add_params(2, Cplx{Real(0), Real(125) / 100} * Real(2), Real(8) / 100,
                          rng);
        Cplx nsum = s.nu[0] + s.nu[1];
        s.mu = add_params(2 * m + 4, nsum - Real(2 * n - 2) * s.tau, Real(8) / 100,
                          rng);
        s.w = Cplx{rng.next_real(Real(1) / 10, Real(4) / 10),
                   rng.next_real(Real(-2) / 10, Real(-1) / 10)};
        return s;
    }
    case SpecKind::SELBERG_SPEC: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::CLASSICAL;
        s.pos_a = {Real(0), Real(1)};
        s.pos_b = {rng.next_real(Real(6) / 10, Real(13) / 10)};
        s.alpha = {Cplx{rng.next_real(Real(4) / 10, Real(12) / 10)},
                   Cplx{rng.next_real(Real(4) / 10, Real(12) / 10)}};
        s.tau = Cplx{rng.next_real(Real(3) / 10, Real(8) / 10)};
        return s;
    }
    case SpecKind::DIXON_SPEC: {
        s.family = Family::TYPE_I_BC;
        s.level = Level::CLASSICAL;
        // -b_m < .. < -b_0 < a_0 < .. < a_n.
        Real b0 = rng.next_real(Real(2) / 10, Real(5) / 10);
        s.pos_b = {b0};
        for (int r = 1; r <= m; ++r)
            s.pos_b.push_back(s.pos_b.back() + rng.next_real(Real(3) / 10, Real(7) / 10));
        s.pos_a = {rng.next_real(Real(1) / 10, Real(4) / 10)};
        for (int r = 1; r <= n; ++r)
            s.pos_a.push_back(s.pos_a.back() + rng.next_real(Real(4) / 10, Real(9) / 10));
        Cplx asum{};
        for (int r = 0; r <= n; ++r) {
            s.alpha.push_back(Cplx{rng.next_real(Real(4) / 10, Real(11) / 10)});
            asum = asum + s.alpha.back();
        }
        auto be = add_params(m + 1, asum, Real(15) / 100, rng);
        for (auto& br : be) s.beta.push_back(Cplx{br.re + Real(6) / 10});
        // recenter so the beta sum matches exactly after the shift
        Cplx bsum{};
        for (auto& br : s.beta) bsum = bsum + br;
        for (auto& br : s.beta) br = br + (asum - bsum) / Real(m + 1);
        return s;
    }
    case SpecKind::CLASS_I:
    case SpecKind::CLASS_II: {
        s.level = Level::CLASSICAL;
        s.on_circle = true;
        s.cl_p = Real(2) / 10;
        s.omega = {Cplx{Real(0), Real(1)}};
        int na = kind == SpecKind::CLASS_I ? n + 1 : 2;
        Real t(0);
        for (int r = 0; r < na; ++r) {
            t += rng.next_real(Real(6) / 100, Real(4) / 10);
            s.pos_a.push_back(t);
        }
        Real scale = (Real(1) / 2 - Real(8) / 100) / t;
        for (auto& pr : s.pos_a) pr = Real(4) / 100 + pr * scale;
        Cplx asum{};
        for (int r = 0; r < na; ++r) {
            s.alpha.push_back(Cplx{rng.next_real(Real(35) / 100, Real(75) / 100)});
            s.alpha.push_back(Cplx{rng.next_real(Real(35) / 100, Real(75) / 100)});
            asum = asum + s.alpha[2 * r] + s.alpha[2 * r + 1];
        }
        if (kind == SpecKind::CLASS_II) {
            s.family = Family::TYPE_II_BC;
            s.tau = Cplx{rng.next_real(Real(3) / 10, Real(6) / 10)};
            asum = asum + Real(2 * (n - 1)) * s.tau;
        } else {
            s.family = Family::TYPE_I_BC;
        }
        int nb = m + 1;
        for (int r = 0; r < nb; ++r)
            s.pos_b.push_back(rng.next_real(Real(55) / 100, Real(95) / 100));
        auto bparts = add_params(2 * nb, asum, Real(6) / 100, rng);
        for (auto& bp : bparts) s.beta.push_back(Cplx{bp.re});
        Cplx bsum{};
        for (auto& bp : s.beta) bsum = bsum + bp;
        s.beta[0] = s.beta[0] + (asum - bsum);
        return s;
    }
    case SpecKind::E7: {
        s.family = Family::TYPE_II_BC;
        s.level = Level::HYPERBOLIC;
        s.n = 1;
        s.m = 1;
        s.omega = {Cplx{Real(0), Real(1)}, Cplx{Real(6) / 10, Real(8) / 10}};
        s.tau = Cplx{rng.next_real(Real(-5) / 100, Real(5) / 100),
                     rng.next_real(Real(35) / 100, Real(45) / 100)};
        Cplx target = Real(2) * (s.omega[0] + s.omega[1]) - Real(4) * s.tau;
        s.mu = add_params(8, target, Real(7) / 100, rng);
        return s;
    }
    }
    throw std::invalid_argument("unknown spec kind");
}

} // namespace ehg
