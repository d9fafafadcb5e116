#include "ehg/gamma.hpp"

#include <stdexcept>
#include <cmath>

namespace ehg {

static Real series_tol()
{
    return ldexp(Real(1), -static_cast<int>(precision_context().total_bits() + 8));
}

LogC qpoch_log(const Cplx& z, const Cplx& q)
{
    Real aq = cabs(q);
    if (aq >= 1) throw std::domain_error("qpoch_log: |q| >= 1");
    Real thr = pole_threshold();
    Cplx acc{Real(0)};
    Cplx w = z;
    int peeled = 0;
    while (cabs(w) > Real(0.5)) {
        Cplx f = Cplx{Real(1)} - w;
        if (cabs(f) < thr) return LogC::zero();
        acc += clog(f);
        w = w * q;
        if (++peeled > 20000) throw std::runtime_error("qpoch_log: |q| too close to 1");
    }
    // -sum_m w^m / (m (1 - q^m)); tail bounded by |w|^{M+1}/((1-|q|)(1-|w|)).
    Real tol = series_tol() * (1 - aq) / 2;
    Cplx s{Real(0)}, wm{Real(1)}, qm{Real(1)};
    for (int m = 1; m < 200000; m++) {
        wm *= w;
        qm *= q;
        s -= wm / ((Cplx{Real(1)} - qm) * Real(m));
        if (cabs(wm) < tol) break;
    }
    return LogC::from_log(acc + s);
}

LogC qpoch_log_series(const Cplx& z, const Cplx& q)
{
    if (cabs(z) >= 1) throw std::domain_error("qpoch_log_series: |z| >= 1");
    Real tol = series_tol() * (1 - cabs(q)) * (1 - cabs(z));
    Cplx s{Real(0)}, wm{Real(1)}, qm{Real(1)};
    for (int m = 1; m < 500000; m++) {
        wm *= z;
        qm *= q;
        s -= wm / ((Cplx{Real(1)} - qm) * Real(m));
        if (cabs(wm) < tol) break;
    }
    return LogC::from_log(s);
}

LogC qpoch_log_finite(const Cplx& z, const Cplx& q, long n)
{
    Real thr = pole_threshold();
    LogC acc = LogC::one();
    Cplx w = z;
    for (long k = 0; k < n; k++) {
        Cplx f = Cplx{Real(1)} - w;
        if (cabs(f) < thr) return LogC::zero();
        acc = acc * LogC::from_cplx(f);
        w = w * q;
    }
    return acc;
}

LogC theta_log(const Cplx& z, const Cplx& p)
{
    return qpoch_log(z, p) * qpoch_log(p / z, p);
}

LogC gamma_t_log(const Cplx& z, const Cplx& q)
{
    return LogC::one() / qpoch_log(z, q);
}

LogC gamma_e_log(const Cplx& z, const std::vector<Cplx>& ps)
{
    const size_t r = ps.size();
    if (r == 1) return theta_log(z, ps[0]);
    if (r == 2) {
        // Outer base = smaller modulus, fewer outer terms.
        Cplx p = ps[0], q = ps[1];
        if (cabs(p) > cabs(q)) std::swap(p, q);
        Cplx zn = p * q / z; // numerator seed p^{j+1} q / z at j = 0 is (pq/z)
        Cplx zd = z;
        Real ap = cabs(p);
        Real cut = series_tol() * (1 - ap);
        LogC acc = LogC::one();
        for (int j = 0; j < 20000; j++) {
            Real sz = std::max(cabs(zn), cabs(zd));
            if (j > 0 && sz < cut) break;
            acc = acc * (qpoch_log(zn, q) / qpoch_log(zd, q));
            zn = zn * p;
            zd = zd * p;
        }
        return acc;
    }
    if (r == 3) {
        const Cplx &p1 = ps[0], &p2 = ps[1], &p3 = ps[2];
        Cplx P = p1 * p2 * p3;
        Real a1 = cabs(p1), a2 = cabs(p2);
        Real cut1 = series_tol() * (1 - a1);
        Real cut2 = series_tol() * (1 - a2);
        LogC acc = LogC::one();
        Cplx f1n = P / z, f1d = z; // p1^{j1} p2^{j2} prefixes applied below
        for (int j1 = 0; j1 < 5000; j1++) {
            Cplx zn = f1n, zd = f1d;
            if (j1 > 0 && std::max(cabs(zn), cabs(zd)) < cut1) break;
            for (int j2 = 0; j2 < 5000; j2++) {
                Real sz = std::max(cabs(zn), cabs(zd));
                if (j2 > 0 && sz < cut2) break;
                acc = acc * qpoch_log(zn, p3) * qpoch_log(zd, p3);
                zn = zn * p2;
                zd = zd * p2;
            }
            f1n = f1n * p1;
            f1d = f1d * p1;
        }
        return acc;
    }
    throw std::domain_error("gamma_e_log: r must be 1..3");
}

LogC gamma_e_log_series(const Cplx& z, const std::vector<Cplx>& ps)
{
    const int r = static_cast<int>(ps.size());
    Cplx P{Real(1)};
    for (auto& p : ps) P *= p;
    Cplx zi = P / z;
    Real az = cabs(z), azi = cabs(zi);
    if (az >= 1 || azi >= 1)
        throw std::domain_error("gamma_e_log_series: z outside annulus");
    Real sgn = (r % 2 == 0) ? Real(1) : Real(-1);
    Real tol = series_tol() * (1 - std::max(az, azi));
    Cplx s{Real(0)};
    Cplx zk{Real(1)}, zik{Real(1)};
    std::vector<Cplx> pk(ps.size(), Cplx{Real(1)});
    for (int k = 1; k < 500000; k++) {
        zk *= z;
        zik *= zi;
        Cplx den{Real(k)};
        for (size_t i = 0; i < ps.size(); i++) {
            pk[i] *= ps[i];
            den *= Cplx{Real(1)} - pk[i];
        }
        s += (sgn * zk - zik) / den;
        if (std::max(cabs(zk), cabs(zik)) < tol) break;
    }
    return LogC::from_log(s);
}

// ---------------------------------------------------------------------------
// Hyperbolic gamma

static Real im_sum(const std::vector<Cplx>& omega)
{
    Real s(0);
    for (auto& w : omega) s += w.im;
    return s;
}

static bool periods_proportional(const std::vector<Cplx>& omega)
{
    for (size_t i = 0; i < omega.size(); i++)
        for (size_t j = i + 1; j < omega.size(); j++) {
            Cplx ratio = omega[i] / omega[j];
            if (abs(ratio.im) < Real(1) / 1000000) return true;
        }
    return false;
}

LogC gamma_h_log_product(const Cplx& x, const std::vector<Cplx>& omega)
{
    const size_t r = omega.size();
    Real thr = pole_threshold();
    Real tol = series_tol();
    Cplx piiP = Cplx{Real(0), pi()} * P_poly(x, omega);
    LogC res = LogC::from_log(piiP);

    for (size_t i = 0; i < r; i++) {
        Cplx z = e_of(-(x / omega[i]));
        // Expansion data for each 1/(e(-n omega_j/omega_i) - 1) factor:
        // modulus < 1 keeps t with sign -1 and offset 0; modulus > 1 flips to
        // 1/t with sign +1 and offset 1.
        std::vector<Cplx> T;
        std::vector<int> off;
        int sgn = 1;
        for (size_t j = 0; j < r; j++) {
            if (j == i) continue;
            Cplx t = e_of(-(omega[j] / omega[i]));
            if (cabs(t) < 1) {
                T.push_back(t);
                off.push_back(0);
                sgn = -sgn;
            } else {
                T.push_back(Cplx{Real(1)} / t);
                off.push_back(1);
            }
        }
        // S_i = sgn * sum over lattice of log(1 - z T1^a T2^b ...).
        Cplx s{Real(0)};
        auto add_term = [&](const Cplx& u) -> bool {
            Cplx f = Cplx{Real(1)} - u;
            if (cabs(f) < thr) {
                res = (sgn > 0) ? LogC::zero() : LogC::pole();
                return false;
            }
            s += Real(sgn) * clog(f);
            return true;
        };
        if (T.empty()) { // r = 1
            if (!add_term(z)) return res;
        } else if (T.size() == 1) {
            Cplx u = z * cpow_int(T[0], off[0]);
            Real cut = tol * (1 - cabs(T[0]));
            for (int a = 0; a < 100000; a++) {
                if (a > 0 && cabs(u) < cut) break;
                if (!add_term(u)) return res;
                u = u * T[0];
            }
        } else {
            Real cut1 = tol * (1 - cabs(T[0]));
            Real cut2 = tol * (1 - cabs(T[1]));
            Cplx ua = z * cpow_int(T[0], off[0]) * cpow_int(T[1], off[1]);
            for (int a = 0; a < 100000; a++) {
                if (a > 0 && cabs(ua) < cut1) break;
                Cplx u = ua;
                for (int b = 0; b < 100000; b++) {
                    if (b > 0 && cabs(u) < cut2) break;
                    if (!add_term(u)) return res;
                    u = u * T[1];
                }
                ua = ua * T[0];
            }
        }
        if (res.is_zero() || res.is_pole()) return res;
        res = res * LogC::from_log(s);
    }
    return res;
}

// Gauss-Legendre nodes and weights on [-1,1] at working precision.
struct GLRule {
    std::vector<Real> x, w;
};

static const GLRule& gl_rule(int n)
{
    thread_local GLRule rule;
    thread_local int cached_n = -1;
    thread_local unsigned cached_prec = 0;
    unsigned prec = Real::default_precision();
    if (cached_n == n && cached_prec == prec) return rule;
    rule.x.assign(n, Real(0));
    rule.w.assign(n, Real(0));
    for (int i = 0; i < n; i++) {
        // Newton from the Chebyshev-like initial guess.
        Real xg = cos(pi() * (i + Real(0.75)) / (n + Real(0.5)));
        Real p0, p1, dp;
        for (int it = 0; it < 80; it++) {
            p0 = 1; p1 = 0;
            for (int j = 1; j <= n; j++) {
                Real p2 = p1;
                p1 = p0;
                p0 = ((2 * j - 1) * xg * p1 - (j - 1) * p2) / j;
            }
            dp = n * (xg * p0 - p1) / (xg * xg - 1);
            Real dx = p0 / dp;
            xg -= dx;
            if (abs(dx) < ldexp(Real(1), -static_cast<int>(prec * 4))) break;
        }
        p0 = 1; p1 = 0;
        for (int j = 1; j <= n; j++) {
            Real p2 = p1;
            p1 = p0;
            p0 = ((2 * j - 1) * xg * p1 - (j - 1) * p2) / j;
        }
        dp = n * (xg * p0 - p1) / (xg * xg - 1);
        rule.x[i] = xg;
        rule.w[i] = 2 / ((1 - xg * xg) * dp * dp);
    }
    cached_n = n;
    cached_prec = prec;
    return rule;
}

LogC gamma_h_log_integral(const Cplx& x, const std::vector<Cplx>& omega,
                          TruncationCertificate* cert)
{
    const int r = static_cast<int>(omega.size());
    Cplx ws{Real(0)};
    for (auto& w : omega) ws += w;

    // Poles of phi sit at n/omega_i, so the Taylor patch converges on
    // |w| < d0 and the contour keeps distance d_axis from every pole.
    Real d0 = Real(1) / cabs(omega[0]);
    Real d_axis = omega[0].im / (cabs(omega[0]) * cabs(omega[0]));
    for (auto& o : omega) {
        d0 = std::min(d0, Real(Real(1) / cabs(o)));
        d_axis = std::min(d_axis, Real(o.im / (cabs(o) * cabs(o))));
    }

    unsigned bits = precision_context().total_bits();
    Real w0 = std::min(Real(1) / 10, Real(d0 / 4));
    int patch_order = static_cast<int>(
        ceil((Real(bits) + 40) * log2_const() / log(d0 / w0)));
    if (patch_order > 600) patch_order = 600;

    auto lau = pqr_laurent(x, omega, patch_order + 4); // lau[k] = P_{k-r}
    auto Pn = [&](int n) { return lau[n + r]; };

    auto phi = [&](const Cplx& w) {
        Cplx den{Real(1)};
        for (auto& o : omega) den *= e_of(o * w) - Cplx{Real(1)};
        return e_of(x * w) / den;
    };
    auto g = [&](const Real& t) {
        Cplx w{t, Real(0)};
        Cplx v = (phi(w) - phi(-w)) / (Real(2) * t);
        v -= Pn(-1) / Cplx{t * t};
        if (r == 3) v -= Pn(-3) / Cplx{t * t * t * t};
        return v;
    };

    // Taylor patch: g(w) = sum_m P_{2m+1} w^{2m} near 0.
    Cplx patch{Real(0)};
    {
        Real wp = w0;
        for (int m = 0; 2 * m <= patch_order; m++) {
            patch += Pn(2 * m + 1) * (wp / Real(2 * m + 1));
            wp *= w0 * w0;
        }
    }

    // Truncation from the exponential decay rate of the integrand.
    Real lam = 2 * pi() * std::min(x.im, Real(ws.im - x.im));
    Real Wt = (Real(bits) * log2_const() + 16) / lam + w0;
    Real h = std::min(Real(1) / 2, Real(d_axis * 2));
    int n_panels = static_cast<int>(ceil((Wt - w0) / h));
    if (n_panels < 2) n_panels = 2;
    if (n_panels > 200000) n_panels = 200000;
    Real b_end = w0 + Real(n_panels) * h;

    // Per-panel error scales like rho^{-2*nodes} with rho the Bernstein
    // ellipse parameter for the nearest pole; grow the rule if h is tight.
    Real rho = 2 * d_axis / h;
    rho += sqrt(rho * rho + 1);
    int nodes = static_cast<int>(
        ceil((Real(bits) + 40) * log2_const() / (2 * log(rho))));
    if (nodes < 32) nodes = 32;
    if (nodes > 256) nodes = 256;
    const GLRule& gl = gl_rule(nodes);
    Cplx I{Real(0)};
    for (int p = 0; p < n_panels; p++) {
        Real a = w0 + Real(p) * h, b = a + h;
        Real mid = (a + b) / 2, half = (b - a) / 2;
        for (int i = 0; i < nodes; i++) {
            Cplx v = g(mid + half * gl.x[i]);
            I += v * (gl.w[i] * half);
        }
    }

    // The subtracted counterterms leave an exact algebraic tail beyond the
    // final panel; the remaining phi-part tail is exponentially small.
    Cplx tail = -Pn(-1) / Cplx{b_end};
    if (r == 3) tail -= Pn(-3) / Cplx{3 * b_end * b_end * b_end};
    Real tail_bound = cabs(phi(Cplx{b_end}) - phi(Cplx{-b_end})) / (lam * b_end);

    if (cert) {
        cert->w0 = w0;
        cert->W = b_end;
        cert->n_panels = n_panels;
        cert->nodes_per_panel = nodes;
        cert->patch_order = patch_order;
        cert->tail_bound = tail_bound;
    }
    Cplx total = (patch + I + tail) * Real(2);
    return LogC::from_log(total);
}

static LogC gamma_h_log_strip(const Cplx& x, const std::vector<Cplx>& omega)
{
    if (omega.size() >= 2 && !periods_proportional(omega))
        return gamma_h_log_product(x, omega);
    return gamma_h_log_integral(x, omega);
}

LogC gamma_h_log(const Cplx& x, const std::vector<Cplx>& omega)
{
    const size_t r = omega.size();
    if (r == 0) return {Real(0), pi()}; // gamma_h^{(0)} = -1
    if (r == 1) {
        // pi i (x/omega - 1/2) + log(1 - e(-x/omega)) == log(2 sin(pi x/omega))
        Cplx y = x / omega[0];
        Cplx f = Cplx{Real(1)} - e_of(-y);
        if (cabs(f) < pole_threshold()) return LogC::zero();
        Cplx l = Cplx{Real(0), pi()} * (y - Cplx{Real(0.5)}) + clog(f);
        return LogC::from_log(l);
    }
    if (r > 3) throw std::domain_error("gamma_h_log: r must be 0..3");

    Real tot = im_sum(omega);
    if (tot <= 0) throw std::domain_error("gamma_h_log: Im(sum omega) <= 0");

    // Reduce into the strip with the shift equation, removing the period of
    // largest imaginary part for the lower-order factor.
    size_t k = 0;
    for (size_t i = 1; i < r; i++)
        if (omega[i].im > omega[k].im) k = i;
    std::vector<Cplx> sub;
    for (size_t i = 0; i < r; i++)
        if (i != k) sub.push_back(omega[i]);

    if (x.im <= 0) {
        LogC acc = LogC::one();
        Cplx y = x;
        for (int step = 0; step < kMaxShift; step++) {
            acc = acc * gamma_h_log(y, sub);
            y += omega[k];
            if (y.im > 0) return gamma_h_log(y, omega) / acc;
        }
        throw std::runtime_error("gamma_h_log: shift cap exceeded (Im too low)");
    }
    if (x.im >= tot) {
        LogC acc = LogC::one();
        Cplx y = x;
        for (int step = 0; step < kMaxShift; step++) {
            y -= omega[k];
            acc = acc * gamma_h_log(y, sub);
            if (y.im < tot) return gamma_h_log(y, omega) * acc;
        }
        throw std::runtime_error("gamma_h_log: shift cap exceeded (Im too high)");
    }
    return gamma_h_log_strip(x, omega);
}

// ---------------------------------------------------------------------------
// Rational gamma

Cplx log_gamma_stirling(const Cplx& z, int m)
{
    Cplx l = (z - Cplx{Real(0.5)}) * clog(z) - z + Cplx{log(2 * pi()) / 2};
    Cplx zp = z;
    for (int i = 1; i <= m; i++) {
        l += Cplx{bernoulli_number(2 * i) / Real(2 * i * (2 * i - 1))} / zp;
        zp *= z * z;
    }
    return l;
}

Cplx log_gamma(const Cplx& z)
{
    // Raise the argument until the m-term Stirling remainder is below the
    // working epsilon, then apply the series.  The shift logs are principal;
    // see the module comment on branch conventions.
    const int m = 12;
    unsigned bits = precision_context().total_bits();
    Real thresh = exp(((Real(bits) + 24) * log2_const()) / (2 * m + 1));
    Cplx y = z;
    Cplx shift{Real(0)};
    int steps = 0;
    // Away from the positive real direction the remainder constant grows like
    // sec(arg/2)^{2m+1}; off-cone arguments need extra modulus but must still
    // stay clear of the negative real axis, where only raising helps.
    auto stirling_ok = [&](const Cplx& w) {
        Real a = cabs(w);
        if (a < thresh) return false;
        if (w.re >= thresh) return true;
        return w.re >= -abs(w.im) && a > 3 * thresh;
    };
    while (!stirling_ok(y)) {
        shift += clog(y);
        y += Cplx{Real(1)};
        if (++steps > 100000) throw std::runtime_error("log_gamma: raising diverged");
    }
    return log_gamma_stirling(y, m) - shift;
}

LogC gamma_r_log(const Cplx& x, const Cplx& omega)
{
    Cplx y = x / omega;
    if (cabs(y) < pole_threshold()) return LogC::pole();
    return LogC::from_log(log_gamma(y) - Cplx{log(2 * pi()) / 2});
}

// ---------------------------------------------------------------------------
// Narukawa product expansion cross-check

Real narukawa_crosscheck(const Cplx& x, const std::vector<Cplx>& omega, int K)
{
    const int r = static_cast<int>(omega.size());
    Cplx ws{Real(0)};
    for (auto& w : omega) ws += w;
    std::vector<Cplx> ps;
    for (auto& w : omega) ps.push_back(e_of(w));

    Cplx lhs = Cplx{Real(0), -2 * pi()} * Q_poly(x, omega) +
               gamma_e_log_series(e_of(x), ps).log_cplx();

    Cplx ipi{Real(0), pi()};
    Cplx rhs{Real(0)};
    for (int k = 0; k < K; k++) {
        Cplx xe = x + Cplx{Real(k + 1)};
        rhs += -ipi * P_poly(xe, omega) + gamma_h_log(xe, omega).log_cplx();
        // x - k terms via the reflection x -> sum(omega) - x, which keeps the
        // product route in its absolutely convergent regime.
        Cplx y = ws - x + Cplx{Real(k)};
        Real refl = (r % 2 == 0) ? Real(1) : Real(-1);
        rhs += ipi * (refl * P_poly(y, omega)) - refl * gamma_h_log(y, omega).log_cplx();
    }
    Cplx d = lhs - rhs;
    return cabs(Cplx{d.re, reduce_arg(d.im)});
}

} // namespace ehg
