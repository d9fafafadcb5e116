// Catalog of the integral families: spec types describing each integral,
// integrand builders in log scale, quadrature drivers, closed-form product
// evaluations, transformation pairs, and limit pairs (finite-parameter
// integral against its limiting integral, with prefactors).
//
// Parameter conventions by level:
//   ELLIPTIC / TRIG_*:   multiplicative lists u, v, tv; bases p, q; coupling t
//   HYPERBOLIC / RATIONAL_*: additive lists mu, nu; periods omega; coupling tau
//   CLASSICAL: points pos_a / pos_b (angles in turns when on_circle, else real
//     points), exponent lists alpha / beta (interleaved +/- halves for the
//     circle forms), coupling tau, real base cl_p
// The auxiliary a / w parameters enter the broken-symmetry forms; Z is the
// A-type constraint prod z_i = Z.
#ifndef EHG_INTEGRALS_HPP
#define EHG_INTEGRALS_HPP

#include "ehg/quad.hpp"
#include "ehg/rng.hpp"
#include <string>
#include <vector>

namespace ehg {

enum class Family { TYPE_I_BC, TYPE_II_BC, TYPE_A };

enum class Level {
    ELLIPTIC,
    HYPERBOLIC,
    TRIG_DIRECT,
    TRIG_BROKEN,
    RATIONAL_DIRECT,
    RATIONAL_BROKEN,
    CLASSICAL,
};

struct IntegralSpec {
    Family family = Family::TYPE_I_BC;
    Level level = Level::ELLIPTIC;
    int n = 1;
    int m = 0;

    std::vector<Cplx> u, v, tv; // multiplicative parameter lists
    Cplx p, q, t;

    std::vector<Cplx> mu, nu; // additive parameter lists
    std::vector<Cplx> omega;
    Cplx tau;

    Cplx a, w;          // broken-symmetry auxiliaries
    Cplx Z{Real(1)};    // A-type constraint value

    // classical level
    Real cl_p = Real(0);
    std::vector<Real> pos_a, pos_b;
    std::vector<Cplx> alpha, beta;
    bool on_circle = false;
};

enum class QuadRegime { TORUS, TORUS_CONSTRAINED, LINE, LINE_CONSTRAINED, ARC };

struct IntegrandInfo {
    Integrand f; // full integrand including the constant prefactors
    int dim = 0;
    QuadRegime regime = QuadRegime::TORUS;
    std::vector<Real> radius;       // torus contour radii
    Cplx shift;                     // line contour offset (applied inside f)
    std::vector<Real> arc_lo, arc_hi;
    // Torus regimes: largest ratio of a contained pole modulus to the contour
    // radius (or radius to an excluded pole); governs Fourier decay and hence
    // the starting grid size.  Zero means unknown.
    Real pole_rate = Real(0);
};

// Builds the integrand evaluator for the spec.  Throws std::invalid_argument
// naming the violated condition when the spec sits outside the
// standard-contour regime.
IntegrandInfo build_integrand(const IntegralSpec& spec);

// Composes build_integrand with the quadrature driver for the spec's
// regime, refining until the relative change drops below tol.
QuadResult eval_integral(const IntegralSpec& spec, const Real& tol);

enum class ClosedFormId {
    TYPE_I_ELL_EVAL,  // m=0: prod_{r<s} Gamma_e(u_r u_s)
    TYPE_II_ELL_EVAL, // m=0: prod_i Gamma_e(t^{i+1}) prod_{r<s} Gamma_e(t^i u_r u_s)
    TYPE_I_HYP_EVAL,  // m=0: prod_{r<s} Gamma_h(mu_r + mu_s)
    TYPE_II_HYP_EVAL, // m=0: prod_i Gamma_h((i+1) tau) prod_{r<s} Gamma_h(i tau + ..)
    TRIG_IIC2_EVAL,   // m=0 broken type II trigonometric evaluation
    SELBERG,          // Selberg integral product of classical gammas
};

LogC closed_form(ClosedFormId id, const IntegralSpec& spec);

struct PairResult {
    LogC lhs, rhs;
};

enum class TransformId {
    TYPE_I_HYP_SWAP,        // (n,m) <-> (m,n) with mu -> (w1+w2)/2 - mu
    E7_INV,                 // Weyl-group invariance (variant selects the substitution)
    TRIG_IC12,              // direct trig integral = products * broken (a=pq) integral
    TRIG_IC3_INVOL,         // w-independence + the (m,n;t;u;v) involution
    TRIG_IIC_M1,            // m=1 type II trig transformation
    RAT_IC12,               // direct rational integral = products * broken integral
    CLASSICAL_DIXON,        // interval-swap transformation of the Dixon integral
    CLASSICAL_SELBERG_TRANS,// Selberg-type transformation with constant C
};

// Evaluates both sides of the transformation.  variant: E7_INV 0..2 picks the
// nu-substitution; TRIG_IC3_INVOL 0 compares w against an independent w', 1
// applies the involution.
PairResult transform_pair(TransformId id, const IntegralSpec& spec, const Real& tol,
                          int variant = 0);

enum class LimitId {
    HYP_IC,          // type I BC elliptic -> hyperbolic
    HYP_IIC,         // type II BC elliptic -> hyperbolic
    HYP_A,           // A-type elliptic -> hyperbolic
    TRIG_IC1,        // p -> 0 direct type I
    TRIG_IC2,        // p -> 0 broken type I, a = pq
    TRIG_IC3,        // p -> 0 broken type I, a = (pq)^{1/2}
    TRIG_IIC1,       // p -> 0 direct type II
    TRIG_IIC2,       // p -> 0 broken type II, a = pq
    TRIG_IIC_NONSYM, // p -> 0 broken type II, a = p^{1/2}
    RAT_IC1,         // q -> 1 direct type I rational
    RAT_IC2,         // q -> 1 broken type I rational
    RAT_IIC,         // q -> 1 direct type II rational
    RAT_IIC_NONSYM,  // q -> 1 broken type II rational
    CLASS_IC,        // q -> 1 type I classical (arc) limit
    CLASS_SELBERG,   // q -> 1 type II classical (arc) limit
    CLASS_A,         // q -> 1 A-type classical limit (n = 1)
};

// Prefactor multiplying the finite-parameter integral at scale v (the trig
// limits use p = v).  spec is the limit-side spec.
LogC limit_prefactor(LimitId id, const Real& v, const IntegralSpec& spec);

// lhs = prefactor * finite-parameter integral, rhs = limit integral (cached
// across calls with the same spec).
PairResult limit_pair(LimitId id, const Real& v, const IntegralSpec& spec,
                      const Real& tol);
void clear_limit_cache();

// Seeded parameter sets satisfying the balancing and contour conditions.
enum class SpecKind {
    ELL_I, ELL_II, ELL_A,
    HYP_I, HYP_II, HYP_A,
    TRIG_IC1, TRIG_IIC1, TRIG_IC2, TRIG_IC3, TRIG_IIC2, TRIG_IIC_NS,
    RAT_IC1, RAT_IC2, RAT_IIC, RAT_IIC_NS,
    SELBERG_SPEC, DIXON_SPEC, CLASS_I, CLASS_II, E7,
};

IntegralSpec seed_spec(SpecKind kind, int n, int m, uint64_t seed);

// theta_h(x; omega) = 2 sin(pi x / omega), the rational-level theta.
LogC theta_h_log(const Cplx& x, const Cplx& omega);

} // namespace ehg

#endif
