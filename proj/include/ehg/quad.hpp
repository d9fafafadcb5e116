// Contour quadrature for the integral families: periodic trapezoid rules on
// torus contours, offset trapezoid rules on line contours with tail
// certificates, double-exponential rules on arcs with endpoint
// singularities, and the constrained variants where one coordinate is
// determined by the others.
//
// Grid evaluation is OpenMP-parallel over fixed-size blocks; each block is
// summed in index order and the block sums are combined by a serial pairwise
// tree, so the result is bit-identical for any thread count.  A plain serial
// accumulation is kept as a reference implementation.
#ifndef EHG_QUAD_HPP
#define EHG_QUAD_HPP

#include "ehg/logval.hpp"
#include <functional>
#include <vector>

namespace ehg {

using Integrand = std::function<LogC(const std::vector<Cplx>&)>;

struct QuadResult {
    LogC value;
    size_t n_points = 0;
    Real tail_bound = Real(0); // line rules: bound on the discarded tails
    Real est_error = Real(0);  // refine_until: rel. change at the last step
    int refinements = 0;
    bool converged = true;
};

// Deterministic block-summed map-reduce of term(0..total-1).
LogC sum_map(size_t total, const std::function<LogC(size_t)>& term, bool parallel);
// Straightforward in-order accumulation (reference route).
LogC sum_map_serial(size_t total, const std::function<LogC(size_t)>& term);

// Whether grid evaluation uses the parallel path (default true; the serial
// route is the reference used by the unit tests and the benchmark).
void set_quad_parallel(bool on);
bool quad_parallel();

// prod_i dz_i/(2 pi sqrt(-1) z_i) over circles |z_i| = radius[i], N points
// per dimension: (1/N^dim) sum over the product grid.
QuadResult torus_quad(const Integrand& f, int dim, int N,
                      const std::vector<Real>& radius);

// prod_i dx_i over lines Im(x_i) = delta, |Re(x_i)| <= T, step h.  decay is
// the exponential decay rate per unit |Re x| used for the tail certificate.
QuadResult line_quad(const Integrand& f, int dim, const Real& h, const Real& T,
                     const Real& delta, const Real& decay);

// Double-exponential rule on the product of real intervals [a_i, b_i], N
// points per dimension; integrable endpoint singularities are fine.
QuadResult arc_quad(const Integrand& f, int dim, int N,
                    const std::vector<Real>& a, const std::vector<Real>& b);

// Torus rule over z_1..z_dim with the dependent coordinate z_0 =
// Z / (z_1...z_dim) passed to f as the first entry of a (dim+1)-vector.
QuadResult constrained_torus_quad(const Integrand& f, int dim, int N,
                                  const Cplx& Z, const std::vector<Real>& radius);
// Line rule over x_1..x_dim with x_0 = X - sum x_i prepended.
QuadResult constrained_line_quad(const Integrand& f, int dim, const Real& h,
                                 const Real& T, const Real& delta,
                                 const Cplx& X, const Real& decay);

// Doubles the resolution parameter until the relative change drops below
// tol (or max_steps is hit); make(k) evaluates refinement level k.
QuadResult refine_until(const std::function<QuadResult(int)>& make, const Real& tol,
                        int max_steps);

} // namespace ehg

#endif
