#include "ehg/quad.hpp"

#include <cmath>
#include <stdexcept>

#ifdef EHG_HAVE_OPENMP
#include <omp.h>
#endif

namespace ehg {

static bool g_parallel = true;
void set_quad_parallel(bool on) { g_parallel = on; }
bool quad_parallel() { return g_parallel; }

static constexpr size_t kBlock = 256;

LogC sum_map_serial(size_t total, const std::function<LogC(size_t)>& term)
{
    LogC acc = LogC::zero();
    for (size_t i = 0; i < total; i++) acc = ladd(acc, term(i));
    return acc;
}

LogC sum_map(size_t total, const std::function<LogC(size_t)>& term, bool parallel)
{
    if (total == 0) return LogC::zero();
    size_t nblocks = (total + kBlock - 1) / kBlock;
    std::vector<LogC> bs(nblocks, LogC::zero());
    unsigned prec = Real::default_precision();

#ifdef EHG_HAVE_OPENMP
    if (parallel) {
#pragma omp parallel
        {
            Real::default_precision(prec); // fresh threads get the library default
#pragma omp for schedule(dynamic)
            for (long b = 0; b < static_cast<long>(nblocks); b++) {
                size_t lo = b * kBlock, hi = std::min(total, lo + kBlock);
                LogC acc = LogC::zero();
                for (size_t i = lo; i < hi; i++) acc = ladd(acc, term(i));
                bs[b] = acc;
            }
        }
    } else
#endif
    {
        (void)parallel;
        for (size_t b = 0; b < nblocks; b++) {
            size_t lo = b * kBlock, hi = std::min(total, lo + kBlock);
            LogC acc = LogC::zero();
            for (size_t i = lo; i < hi; i++) acc = ladd(acc, term(i));
            bs[b] = acc;
        }
    }

    // Pairwise tree over block sums; fixed shape, independent of threading.
    while (bs.size() > 1) {
        size_t half = (bs.size() + 1) / 2;
        for (size_t i = 0; i + half < bs.size(); i++) bs[i] = ladd(bs[i], bs[i + half]);
        bs.resize(half);
    }
    return bs[0];
}

// Decode flat index into dim digits base N.
static inline void decode(size_t idx, int dim, int N, std::vector<int>& out)
{
    for (int d = 0; d < dim; d++) {
        out[d] = static_cast<int>(idx % N);
        idx /= N;
    }
}

QuadResult torus_quad(const Integrand& f, int dim, int N, const std::vector<Real>& radius)
{
    size_t total = 1;
    for (int d = 0; d < dim; d++) total *= N;
    // Precompute the circle points per dimension.
    std::vector<std::vector<Cplx>> pts(dim, std::vector<Cplx>(N));
    for (int d = 0; d < dim; d++)
        for (int k = 0; k < N; k++) {
            Real th = 2 * pi() * k / N;
            pts[d][k] = {radius[d] * cos(th), radius[d] * sin(th)};
        }

    LogC s = sum_map(total, [&](size_t idx) {
        std::vector<int> ix(dim);
        decode(idx, dim, N, ix);
        std::vector<Cplx> z(dim);
        for (int d = 0; d < dim; d++) z[d] = pts[d][ix[d]];
        return f(z);
    }, g_parallel);

    QuadResult r;
    r.value = s * LogC::from_cplx(Cplx{Real(1) / Real(total)});
    r.n_points = total;
    return r;
}

QuadResult line_quad(const Integrand& f, int dim, const Real& h, const Real& T,
                     const Real& delta, const Real& decay)
{
    long K = static_cast<long>(ceil(T / h).convert_to<double>());
    long N = 2 * K + 1;
    size_t total = 1;
    for (int d = 0; d < dim; d++) total *= N;

    std::vector<Cplx> pts(N);
    for (long k = 0; k < N; k++) pts[k] = {(k - K) * h, delta};

    Real shell_max = -std::numeric_limits<Real>::infinity();
    LogC s = sum_map(total, [&](size_t idx) {
        std::vector<Cplx> z(dim);
        bool boundary = false;
        size_t t = idx;
        for (int d = 0; d < dim; d++) {
            long k = static_cast<long>(t % N);
            t /= N;
            z[d] = pts[k];
            if (k == 0 || k == N - 1) boundary = true;
        }
        LogC v = f(z);
        if (boundary && v.is_finite()) {
#ifdef EHG_HAVE_OPENMP
#pragma omp critical(ehg_line_shell)
#endif
            { if (v.log_abs > shell_max) shell_max = v.log_abs; }
        }
        return v;
    }, g_parallel);

    QuadResult r;
    Real hn = pow(h, dim);
    r.value = s * LogC::from_cplx(Cplx{hn});
    r.n_points = total;
    // Tail certificate: boundary magnitude decays at rate `decay` per unit,
    // so the discarded sum per dimension is bounded by a geometric series.
    if (decay > 0 && !isinf(shell_max)) {
        Real geo = h / (1 - exp(-decay * h));
        r.tail_bound = Real(2 * dim) * exp(shell_max) * geo * pow(h, dim - 1) *
                       pow(Real(N), dim - 1);
    }
    return r;
}

QuadResult arc_quad(const Integrand& f, int dim, int N,
                    const std::vector<Real>& a, const std::vector<Real>& b)
{
    // tanh-sinh nodes on [-1,1]: x = tanh(pi/2 sinh t).
    unsigned bits = precision_context().total_bits();
    Real tmax = asinh((Real(bits + 8) * log2_const() * 2) / pi());
    Real ht = 2 * tmax / (N - 1);
    std::vector<Real> xs(N), ws(N);
    for (int i = 0; i < N; i++) {
        Real t = -tmax + i * ht;
        Real sh = pi() / 2 * sinh(t);
        xs[i] = tanh(sh);
        ws[i] = ht * (pi() / 2) * cosh(t) / (cosh(sh) * cosh(sh));
    }

    size_t total = 1;
    for (int d = 0; d < dim; d++) total *= N;

    LogC s = sum_map(total, [&](size_t idx) {
        std::vector<Cplx> z(dim);
        LogC wgt = LogC::one();
        size_t t = idx;
        for (int d = 0; d < dim; d++) {
            int k = static_cast<int>(t % N);
            t /= N;
            Real mid = (a[d] + b[d]) / 2, half = (b[d] - a[d]) / 2;
            z[d] = Cplx{mid + half * xs[k]};
            wgt = wgt * LogC::from_cplx(Cplx{half * ws[k]});
        }
        LogC v = f(z);
        if (v.is_pole()) return LogC::zero(); // integrable endpoint blow-up
        return v * wgt;
    }, g_parallel);

    QuadResult r;
    r.value = s;
    r.n_points = total;
    return r;
}

QuadResult constrained_torus_quad(const Integrand& f, int dim, int N,
                                  const Cplx& Z, const std::vector<Real>& radius)
{
    size_t total = 1;
    for (int d = 0; d < dim; d++) total *= N;
    std::vector<std::vector<Cplx>> pts(dim, std::vector<Cplx>(N));
    for (int d = 0; d < dim; d++)
        for (int k = 0; k < N; k++) {
            Real th = 2 * pi() * k / N;
            pts[d][k] = {radius[d] * cos(th), radius[d] * sin(th)};
        }

    LogC s = sum_map(total, [&](size_t idx) {
        std::vector<int> ix(dim);
        decode(idx, dim, N, ix);
        std::vector<Cplx> z(dim + 1);
        Cplx prod{Real(1)};
        for (int d = 0; d < dim; d++) {
            z[d + 1] = pts[d][ix[d]];
            prod *= z[d + 1];
        }
        z[0] = Z / prod;
        return f(z);
    }, g_parallel);

    QuadResult r;
    r.value = s * LogC::from_cplx(Cplx{Real(1) / Real(total)});
    r.n_points = total;
    return r;
}

QuadResult constrained_line_quad(const Integrand& f, int dim, const Real& h,
                                 const Real& T, const Real& delta, const Cplx& X,
                                 const Real& decay)
{
    long K = static_cast<long>(ceil(T / h).convert_to<double>());
    long N = 2 * K + 1;
    size_t total = 1;
    for (int d = 0; d < dim; d++) total *= N;
    std::vector<Cplx> pts(N);
    for (long k = 0; k < N; k++) pts[k] = {(k - K) * h, delta};

    LogC s = sum_map(total, [&](size_t idx) {
        std::vector<Cplx> z(dim + 1);
        Cplx sum{Real(0)};
        size_t t = idx;
        for (int d = 0; d < dim; d++) {
            long k = static_cast<long>(t % N);
            t /= N;
            z[d + 1] = pts[k];
            sum += pts[k];
        }
        z[0] = X - sum;
        return f(z);
    }, g_parallel);

    QuadResult r;
    r.value = s * LogC::from_cplx(Cplx{pow(h, dim)});
    r.n_points = total;
    (void)decay;
    return r;
}

QuadResult refine_until(const std::function<QuadResult(int)>& make, const Real& tol,
                        int max_steps)
{
    QuadResult prev = make(0);
    for (int k = 1; k <= max_steps; k++) {
        QuadResult cur = make(k);
        Real d = rel_diff(cur.value, prev.value);
        cur.est_error = d;
        cur.refinements = k;
        if (d < tol) {
            cur.converged = true;
            return cur;
        }
        prev = cur;
    }
    prev.converged = false;
    return prev;
}

} // namespace ehg
