// Catalog of asymptotic estimates for the gamma hierarchy: each case turns
// one estimate into a residual measured over a schedule of v (or 1/|x|)
// values, fits the claimed decay model, and reports a verdict.
#ifndef EHG_ASYMPTOTICS_HPP
#define EHG_ASYMPTOTICS_HPP

#include "ehg/logval.hpp"
#include <string>
#include <vector>

namespace ehg {

enum class EstimateCase {
    HYPERB_ASYMPT_BOUND, // explicit bound on the shifted contour integral
    RESIDUE_SUM,         // residue-corrected large-x expansion of log gamma_h
    HYPERB_ASYMPT,       // -pi i P + log gamma_h = O(exp(-2 pi a |x|))
    XBIG_VSMALL,         // joint x-large / v-small estimate (O(v) at fixed x)
    HYPER_TO_RAT_COR,    // gamma_h ratio -> (alpha-beta) log gamma_h^{(r-1)}
    STIRLING,            // Stirling series remainder, O(|x|^{1-2m})
    GAMMA_RATIO_COR,     // gamma_r ratio vs Bernoulli series, O(v^m)
    HYPER_TO_RAT,        // gamma_h ratio with gamma_r counterterm, O(v)
    HYPER_TO_RAT2,       // log gamma_h^{(2)}(v a w2; w1, v w2) closed form
    ELL_TO_HYPER1,       // -2 pi i Q + log gamma_e = O(exp(-2 pi A / v))
    ELL_TO_HYPER2,       // -2 pi i R + log gamma_e - log gamma_h = O(exp(..))
    ELL_BOUND_HYPER,     // grid boundedness of gamma_e against e(Q), e(R)
    ELL_TO_RAT1,         // elliptic ratio with gamma_r counterterm, O(v)
    ELL_TO_RAT2,         // gamma_e near 1: pi i/12vw + (a-1/2) log(..) + O(v)
    ELL_TO_RAT3,         // elliptic ratio -> gamma_e^{(r-1)}(z)^{alpha-beta}
    ELL_BOUND_RAT,       // boundedness of the elliptic ratio on |p| < z < 1
    TRIG_TO_RAT0,        // trigonometric ratio -> (alpha-beta) log(1-z)
    TRIG_THEOREM,        // elliptic ratio with trigonometric counterterm
    TRIG_TO_RAT,         // trigonometric ratio with gamma_r counterterm
    KOORNWINDER,         // log gamma_t(e(v a w); e(v w)) closed form
};

enum class DecayModel {
    EXP_DECAY,  // log residual affine in 1/v with negative slope
    LINEAR_O_V, // residual proportional to v
    POWER_O_VM, // residual proportional to v^m
    BOUNDED,    // residual (a sup over a grid) stays bounded as v -> 0
};

struct EstimateRow {
    Real v;        // schedule point (v value, or 1/|x| for large-x cases)
    Real residual;
};

struct FitResult {
    Real rate = Real(0);         // EXP: decay rate per 1/v; else log-log slope
    Real fit_residual = Real(0); // RMS fit error over the log-residual range
};

// Least-squares fit of log(residual) against 1/v (EXP_DECAY) or log v
// (all other models).  Points at the arithmetic noise floor are dropped.
FitResult fit_decay(const std::vector<EstimateRow>& rows, DecayModel model);

struct ConvergenceReport {
    EstimateCase case_id;
    std::string name;
    DecayModel model;
    std::vector<EstimateRow> rows;
    Real rate = Real(0);
    Real expected_rate = Real(0); // 0 when the statement names no constant
    Real fit_residual = Real(0);
    bool passed = false;
    std::string detail;
};

const char* case_name(EstimateCase c);
std::vector<EstimateCase> estimate_catalog();
std::vector<Real> default_schedule(EstimateCase c);

// Evaluates the case's residual over the schedule (default schedule if
// empty), fits the expected model, and applies the verdict rules:
// EXP_DECAY: negative log-slope, fit residual < 0.15, fitted rate within
// 30% of the predicted constant when one is named.  LINEAR_O_V: log-log
// slope in [0.5, 1.5].  POWER_O_VM: slope within 30% of the expected
// exponent.  BOUNDED: log-log slope >= -0.1 (no growth as v -> 0), plus an
// explicit cap when the statement provides a computable bound.
ConvergenceReport run_case(EstimateCase c, const std::vector<Real>& schedule = {});

} // namespace ehg

#endif
