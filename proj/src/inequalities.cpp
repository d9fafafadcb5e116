#include "ehg/inequalities.hpp"
#include "ehg/gamma.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ehg {

static Real vt_pm(const Real& x, const Real& y)
{
    return vartheta(x + y) + vartheta(x - y);
}

Real tri_deficit(TriVariant v, const std::vector<Real>& c, const std::vector<Real>& d)
{
    const int nc = static_cast<int>(c.size());
    const int nd = static_cast<int>(d.size());
    Real s(0);
    switch (v) {
    case TriVariant::ELL: {
        for (int i = 0; i < nc; i++)
            for (int j = 0; j < nd; j++) s += vartheta(c[i] - d[j]);
        for (int i = 0; i < nc; i++)
            for (int j = i + 1; j < nc; j++) s -= vartheta(c[i] - c[j]);
        for (int i = 0; i < nd; i++)
            for (int j = i + 1; j < nd; j++) s -= vartheta(d[i] - d[j]);
        Real t(0);
        for (int i = 0; i < nc; i++) t += c[i];
        for (int j = 0; j < nd; j++) t -= d[j];
        s -= vartheta(t);
        return s;
    }
    case TriVariant::ELLC: {
        // c has n+1 entries, d has n.
        for (int i = 0; i < nc; i++)
            for (int j = 0; j < nd; j++) s += vt_pm(c[i], d[j]);
        for (int i = 0; i < nc; i++)
            for (int j = i + 1; j < nc; j++) s -= vt_pm(c[i], c[j]);
        for (int i = 0; i < nd; i++)
            for (int j = i + 1; j < nd; j++) s -= vt_pm(d[i], d[j]);
        for (int j = 0; j < nd; j++) s -= vartheta(2 * d[j]);
        return s;
    }
    case TriVariant::COR: {
        for (int i = 0; i < nc; i++)
            for (int j = i + 1; j < nc; j++) s += 2 * vt_pm(c[i], c[j]);
        for (int i = 0; i < nc; i++) s -= (nc - 1) * vartheta(2 * c[i]);
        return s;
    }
    case TriVariant::ABS2: {
        for (int i = 0; i < nc; i++)
            for (int j = 0; j < nd; j++) s += abs(c[i] - d[j]);
        for (int i = 0; i < nc; i++)
            for (int j = i + 1; j < nc; j++) s -= abs(c[i] - c[j]);
        for (int i = 0; i < nd; i++)
            for (int j = i + 1; j < nd; j++) s -= abs(d[i] - d[j]);
        Real t(0);
        for (int i = 0; i < nc; i++) t += c[i];
        for (int j = 0; j < nd; j++) t -= d[j];
        s -= abs(t);
        return s;
    }
    case TriVariant::ABS1: {
        for (int i = 0; i < nc; i++)
            for (int j = 0; j < nd; j++) s += abs(c[i] - d[j]);
        for (int i = 0; i < nc; i++)
            for (int j = i + 1; j < nc; j++) s -= abs(c[i] - c[j]);
        for (int i = 0; i < nd; i++)
            for (int j = i + 1; j < nd; j++) s -= abs(d[i] - d[j]);
        return s;
    }
    }
    throw std::logic_error("tri_deficit: bad variant");
}

// Alternating-chain check lo[0] <= hi[0] <= lo[1] <= ... for sorted inputs,
// where lo has either the same length as hi or one more entry.
static bool chain_ok(std::vector<Real> lo, std::vector<Real> hi, const Real& tol)
{
    std::sort(lo.begin(), lo.end());
    std::sort(hi.begin(), hi.end());
    if (lo.size() == hi.size()) {
        for (size_t k = 0; k < hi.size(); k++) {
            if (lo[k] > hi[k] + tol) return false;
            if (k + 1 < lo.size() && hi[k] > lo[k + 1] + tol) return false;
        }
        return true;
    }
    // lo = c_0..c_n, hi = d_1..d_n: c_0 <= d_1 <= c_1 <= ...
    for (size_t k = 0; k < hi.size(); k++) {
        if (lo[k] > hi[k] + tol) return false;
        if (hi[k] > lo[k + 1] + tol) return false;
    }
    return true;
}

static Real min_pm_frac(const Real& x)
{
    Real f = frac_part(x);
    return std::min(f, Real(1 - f));
}

bool interlace_test(TriVariant v, const std::vector<Real>& c, const std::vector<Real>& d,
                    const Real& tol)
{
    switch (v) {
    case TriVariant::ELL: {
        std::vector<Real> fc, fd;
        for (auto& x : c) fc.push_back(frac_part(x));
        for (auto& x : d) fd.push_back(frac_part(x));
        return chain_ok(fc, fd, tol) || chain_ok(fd, fc, tol);
    }
    case TriVariant::ELLC: {
        std::vector<Real> mc, md;
        for (auto& x : c) mc.push_back(min_pm_frac(x));
        for (auto& x : d) md.push_back(min_pm_frac(x));
        return chain_ok(mc, md, tol);
    }
    case TriVariant::COR: {
        Real lo = min_pm_frac(c[0]), hi = lo;
        for (auto& x : c) {
            Real m = min_pm_frac(x);
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        return hi - lo <= tol;
    }
    case TriVariant::ABS2: {
        return chain_ok(c, d, tol) || chain_ok(d, c, tol);
    }
    case TriVariant::ABS1: {
        return chain_ok(c, d, tol);
    }
    }
    throw std::logic_error("interlace_test: bad variant");
}

// ---------------------------------------------------------------------------
// Identities

static int sgn_of(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Leibniz determinant for small complex matrices.
static Cplx det_small(const std::vector<std::vector<Cplx>>& M)
{
    const int n = static_cast<int>(M.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Cplx det{Real(0)};
    do {
        int inv = 0;
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                if (perm[i] > perm[j]) inv++;
        Cplx term{Real(inv % 2 ? -1 : 1)};
        for (int i = 0; i < n; i++) term *= M[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

static Cplx rand_on_annulus(CounterRng& rng, double lo, double hi)
{
    Real r = rng.next_real(Real(lo), Real(hi));
    Real th = rng.next_real(Real(0), 2 * pi());
    return {r * cos(th), r * sin(th)};
}

// Random interlacing pair x_1<y_1<x_2<..., distinct, for the sign dets.
static void rand_interlacing(CounterRng& rng, int n, std::vector<Real>& x,
                             std::vector<Real>& y)
{
    std::vector<Real> all;
    for (int i = 0; i < 2 * n; i++) all.push_back(rng.next_real(Real(-3), Real(3)));
    std::sort(all.begin(), all.end());
    x.clear();
    y.clear();
    for (int i = 0; i < 2 * n; i++)
        (i % 2 == 0 ? x : y).push_back(all[i]);
}

static Real frobenius_det_residual(int n, CounterRng& rng)
{
    Cplx p = rand_on_annulus(rng, 0.05, 0.4);
    Cplx t = rand_on_annulus(rng, 0.6, 1.4);
    std::vector<Cplx> a, b;
    for (int i = 0; i < n; i++) a.push_back(rand_on_annulus(rng, 0.7, 1.3));
    for (int i = 0; i < n; i++) b.push_back(rand_on_annulus(rng, 0.7, 1.3));

    std::vector<std::vector<Cplx>> M(n, std::vector<Cplx>(n));
    LogC th_t = theta_log(t, p);
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            LogC num = theta_log(t * a[i] / b[j], p);
            M[i][j] = (num / (th_t * theta_log(a[i] / b[j], p))).to_cplx();
        }
    Cplx lhs = det_small(M);

    Cplx prod_ab{Real(1)};
    for (int i = 0; i < n; i++) prod_ab *= a[i] / b[i];
    LogC rhs = theta_log(t * prod_ab, p) / th_t;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            rhs = rhs * LogC::from_cplx(a[j] / b[i]);
            rhs = rhs * theta_log(a[i] / a[j], p) * theta_log(b[i] / b[j], p);
        }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) rhs = rhs / theta_log(a[i] / b[j], p);
    if ((n * (n - 1) / 2) % 2) rhs = rhs * LogC{Real(0), pi()};
    return rel_diff(LogC::from_cplx(lhs), rhs);
}

static Real sign_det_cauchy_residual(int n, CounterRng& rng)
{
    std::vector<Real> x, y;
    bool interlace = (rng.next_u64() % 2) == 0;
    if (interlace) {
        rand_interlacing(rng, n, x, y);
        if (rng.next_u64() % 2) std::swap(x, y);
        // Shuffle so the implementation cannot rely on sortedness.
        for (int i = n - 1; i > 0; i--) {
            std::swap(x[i], x[rng.next_long(0, i)]);
            std::swap(y[i], y[rng.next_long(0, i)]);
        }
    } else {
        if (n < 2) return Real(0);
        for (int i = 0; i < n; i++) x.push_back(rng.next_real(Real(-3), Real(3)));
        for (int i = 0; i < n; i++) y.push_back(rng.next_real(Real(-3), Real(3)));
        std::vector<Real> xs = x, ys = y;
        if (interlace_test(TriVariant::ABS2, xs, ys, Real(0))) return Real(0); // rare; skip
    }

    std::vector<std::vector<Cplx>> M(n, std::vector<Cplx>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) M[i][j] = Cplx{Real(sgn_of(x[i] - y[j]))};
    Cplx det = det_small(M);

    Real rhs(0);
    if (interlace) {
        long s = 1;
        for (int i = 0; i < n; i++)
            for (int j = 0; j < n; j++) s *= sgn_of(x[i] - y[j]);
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++) s *= sgn_of(x[i] - x[j]) * sgn_of(y[i] - y[j]);
        if ((n * (n - 1) / 2) % 2) s = -s;
        rhs = ldexp(Real(s), n - 1);
    }
    return abs(det.re - rhs);
}

static Real sign_det_tau_residual(int n, CounterRng& rng)
{
    std::vector<Real> c, d;
    rand_interlacing(rng, n, c, d);
    if (rng.next_u64() % 2) std::swap(c, d);
    Real x = rng.next_real(Real(0.3), Real(3));
    if (abs(x - 1) < Real(0.05)) x += Real(0.1);

    std::vector<std::vector<Cplx>> M(n, std::vector<Cplx>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) M[i][j] = Cplx{pow(x, sgn_of(c[i] - d[j]))};
    Cplx det = det_small(M);

    Real sc(0);
    for (int i = 0; i < n; i++) sc += c[i] - d[i];
    long s = sgn_of(sc);
    Real rhs = pow(x - 1 / x, n - 1) * s * pow(x, sgn_of(sc));
    if ((n * (n - 1) / 2) % 2) rhs = -rhs;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) {
            long f = sgn_of(c[i] - c[j]) * sgn_of(d[i] - d[j]);
            rhs *= f;
        }
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) rhs /= sgn_of(c[i] - d[j]);
    return abs(det.re - rhs) / abs(rhs);
}

static Real diffop_ic_residual(int n, CounterRng& rng)
{
    Cplx q = rand_on_annulus(rng, 0.1, 0.45);
    std::vector<Cplx> u, z;
    for (int r = 0; r < n + 2; r++) u.push_back(rand_on_annulus(rng, 0.6, 1.4));
    for (int i = 0; i < n; i++) z.push_back(rand_on_annulus(rng, 0.7, 1.3));

    Cplx uprod{Real(1)};
    for (auto& ur : u) uprod *= ur;

    Cplx lhs{Real(0)};
    for (int mask = 0; mask < (1 << n); mask++) {
        std::vector<Cplx> w(n);
        for (int i = 0; i < n; i++)
            w[i] = (mask >> i & 1) ? Cplx{Real(1)} / z[i] : z[i];
        Cplx zprod{Real(1)};
        for (auto& wi : w) zprod *= wi;
        LogC term = theta_log(uprod / zprod, q);
        for (int i = 0; i < n; i++)
            for (auto& ur : u) term = term * theta_log(ur * w[i], q);
        for (int i = 0; i < n; i++)
            for (int j = i; j < n; j++) term = term / theta_log(w[i] * w[j], q);
        lhs += term.to_cplx();
    }

    LogC rhs = LogC::one();
    for (size_t r = 0; r < u.size(); r++)
        for (size_t t = r + 1; t < u.size(); t++) rhs = rhs * theta_log(u[r] * u[t], q);
    return rel_diff(LogC::from_cplx(lhs), rhs);
}

static Real diffop_iic_residual(int n, CounterRng& rng)
{
    Cplx q = rand_on_annulus(rng, 0.1, 0.45);
    Cplx t = rand_on_annulus(rng, 0.5, 0.9);
    std::vector<Cplx> u, z;
    for (int r = 0; r < 3; r++) u.push_back(rand_on_annulus(rng, 0.6, 1.4));
    for (int i = 0; i < n; i++) z.push_back(rand_on_annulus(rng, 0.7, 1.3));
    Cplx u012 = u[0] * u[1] * u[2];
    Cplx tn1 = cpow_int(t, n - 1);

    Cplx lhs{Real(0)};
    for (int mask = 0; mask < (1 << n); mask++) {
        std::vector<Cplx> w(n);
        for (int i = 0; i < n; i++)
            w[i] = (mask >> i & 1) ? Cplx{Real(1)} / z[i] : z[i];
        LogC term = LogC::one();
        for (int i = 0; i < n; i++) {
            term = term * theta_log(u[0] * w[i], q) * theta_log(u[1] * w[i], q) *
                   theta_log(u[2] * w[i], q) * theta_log(tn1 * u012 / w[i], q);
            term = term / theta_log(w[i] * w[i], q);
        }
        for (int i = 0; i < n; i++)
            for (int j = i + 1; j < n; j++)
                term = term * theta_log(t * w[i] * w[j], q) / theta_log(w[i] * w[j], q);
        lhs += term.to_cplx();
    }

    LogC rhs = LogC::one();
    Cplx tp{Real(1)};
    for (int i = 0; i < n; i++) {
        rhs = rhs * theta_log(tp * u[0] * u[1], q) * theta_log(tp * u[0] * u[2], q) *
              theta_log(tp * u[1] * u[2], q);
        tp *= t;
    }
    return rel_diff(LogC::from_cplx(lhs), rhs);
}

static Real a_type_symm_residual(int n, CounterRng& rng)
{
    Cplx q = rand_on_annulus(rng, 0.1, 0.45);
    Cplx x = rand_on_annulus(rng, 0.6, 1.4);
    std::vector<Cplx> z, u(n + 1), v(n + 1);
    for (int i = 0; i <= n; i++) z.push_back(rand_on_annulus(rng, 0.7, 1.3));
    for (int j = 1; j <= n; j++) u[j] = rand_on_annulus(rng, 0.6, 1.4);
    for (int j = 0; j < n; j++) v[j] = rand_on_annulus(rng, 0.6, 1.4);

    // prefix[i] = prod_{j<i} v_j, suffix[i] = prod_{i<j<=n} u_j.
    std::vector<Cplx> vpre(n + 2, Cplx{Real(1)}), usuf(n + 2, Cplx{Real(1)});
    for (int i = 1; i <= n + 1; i++) vpre[i] = vpre[i - 1] * v[i - 1];
    for (int i = n - 1; i >= 0; i--) usuf[i] = usuf[i + 1] * u[i + 1];

    std::vector<int> perm(n + 1);
    std::iota(perm.begin(), perm.end(), 0);
    Cplx lhs{Real(0)};
    do {
        LogC term = LogC::one();
        for (int i = 0; i <= n; i++) {
            const Cplx& zi = z[perm[i]];
            term = term * theta_log(x * zi / (vpre[i] * usuf[i]), q);
            for (int j = 0; j < i; j++) term = term * theta_log(v[j] * zi, q);
            for (int j = i + 1; j <= n; j++) term = term * theta_log(u[j] * zi, q);
        }
        for (int i = 0; i <= n; i++)
            for (int j = i + 1; j <= n; j++) {
                term = term / (LogC::from_cplx(z[perm[j]]) *
                               theta_log(z[perm[i]] / z[perm[j]], q));
                term = term / (LogC::from_cplx(u[j]) * theta_log(v[i] / u[j], q));
            }
        lhs += term.to_cplx();
    } while (std::next_permutation(perm.begin(), perm.end()));

    Cplx zprod{Real(1)};
    for (auto& zi : z) zprod *= zi;
    LogC rhs = theta_log(x * zprod, q);
    for (int i = 1; i <= n; i++)
        rhs = rhs * theta_log(x / (vpre[i] * usuf[i - 1]), q);
    return rel_diff(LogC::from_cplx(lhs), rhs);
}

Real identity_residual(IdentityKind kind, int n, CounterRng& rng)
{
    switch (kind) {
    case IdentityKind::FROBENIUS_DET: return frobenius_det_residual(n, rng);
    case IdentityKind::SIGN_DET_CAUCHY: return sign_det_cauchy_residual(n, rng);
    case IdentityKind::SIGN_DET_TAU: return sign_det_tau_residual(n, rng);
    case IdentityKind::DIFFOP_IC: return diffop_ic_residual(n, rng);
    case IdentityKind::DIFFOP_IIC: return diffop_iic_residual(n, rng);
    case IdentityKind::A_TYPE_SYMM: return a_type_symm_residual(n, rng);
    }
    throw std::logic_error("identity_residual: bad kind");
}

// ---------------------------------------------------------------------------
// Sweeps

std::vector<SweepReport> sweep(uint64_t seed, int trials)
{
    std::vector<SweepReport> reports;
    const Real eq_thresh = Real(1) / Real("1000000000000"); // 1e-12
    const Real margin = Real(1) / 1000;

    const TriVariant variants[] = {TriVariant::ELL, TriVariant::ELLC, TriVariant::COR,
                                   TriVariant::ABS2, TriVariant::ABS1};
    const char* vnames[] = {"tri_ell", "tri_ellC", "tri_cor", "tri_abs2", "tri_abs1"};

    // Whether the configuration is within `margin` of the equality set
    // boundary, where the deficit<->interlace equivalence is not sampled.
    auto near_boundary = [&](TriVariant v, const std::vector<Real>& c,
                             const std::vector<Real>& d) {
        Real deficit = tri_deficit(v, c, d);
        return deficit > eq_thresh && deficit < margin;
    };

    for (int vi = 0; vi < 5; vi++) {
        TriVariant v = variants[vi];
        SweepReport rep;
        rep.name = vnames[vi];
        CounterRng rng(seed, 1000 + vi);
        for (int t = 0; t < trials; t++) {
            int n = static_cast<int>(rng.next_long(1, 4));
            int nc = n, nd = n;
            if (v == TriVariant::ELLC || v == TriVariant::ABS1) nc = n + 1;
            if (v == TriVariant::COR) nd = 0;
            std::vector<Real> c, d;
            bool force_equality = (t % 3 == 2);
            if (force_equality) {
                // Construct a configuration satisfying the equality chain.
                std::vector<Real> all;
                for (int i = 0; i < nc + nd; i++)
                    all.push_back(rng.next_real(Real(0), Real(0.499)));
                std::sort(all.begin(), all.end());
                if (v == TriVariant::COR) {
                    Real m = all[0];
                    for (int i = 0; i < nc; i++)
                        c.push_back((rng.next_u64() % 2) ? m : 1 - m);
                } else if (nc > nd) {
                    for (int i = 0; i < nc + nd; i++)
                        (i % 2 == 0 ? c : d).push_back(all[i]);
                } else {
                    for (int i = 0; i < nc + nd; i++)
                        (i % 2 == 0 ? c : d).push_back(all[i]);
                }
                if (v == TriVariant::ELL || v == TriVariant::ELLC) {
                    // Shift everything by a common integer-free offset;
                    // vartheta variants only see fractional parts.
                    Real off = rng.next_real(Real(0), Real(1));
                    if (v == TriVariant::ELL) {
                        for (auto& x : c) x += off;
                        for (auto& x : d) x += off;
                    }
                }
            } else {
                for (int i = 0; i < nc; i++) c.push_back(rng.next_real(Real(-2), Real(3)));
                for (int i = 0; i < nd; i++) d.push_back(rng.next_real(Real(-2), Real(3)));
            }

            Real deficit = tri_deficit(v, c, d);
            rep.trials++;
            if (deficit < rep.worst) rep.worst = deficit;
            if (deficit < -eq_thresh) { rep.failures++; continue; }
            if (near_boundary(v, c, d)) continue;
            bool eq = deficit < eq_thresh;
            bool il = interlace_test(v, c, d, margin / 10);
            if (eq != il) rep.failures++;
        }
        rep.passed = rep.failures == 0 && rep.worst > -eq_thresh;
        reports.push_back(rep);
    }

    const IdentityKind kinds[] = {IdentityKind::FROBENIUS_DET, IdentityKind::SIGN_DET_CAUCHY,
                                  IdentityKind::SIGN_DET_TAU, IdentityKind::DIFFOP_IC,
                                  IdentityKind::DIFFOP_IIC, IdentityKind::A_TYPE_SYMM};
    const char* knames[] = {"frobenius_det", "sign_det_cauchy", "sign_det_tau",
                            "diffop_ic", "diffop_iic", "a_type_symm"};
    const int kmax_n[] = {4, 5, 4, 3, 3, 2};
    Real id_thresh = ldexp(Real(1), -static_cast<int>(precision_context().sig_bits / 2));

    for (int ki = 0; ki < 6; ki++) {
        SweepReport rep;
        rep.name = knames[ki];
        CounterRng rng(seed, 2000 + ki);
        for (int t = 0; t < trials; t++) {
            int n = static_cast<int>(rng.next_long(1, kmax_n[ki]));
            Real res = identity_residual(kinds[ki], n, rng);
            rep.trials++;
            if (res > rep.worst) rep.worst = res;
            if (res > id_thresh) rep.failures++;
        }
        rep.passed = rep.failures == 0;
        reports.push_back(rep);
    }
    return reports;
}

} // namespace ehg
