// Generalized triangle inequalities over vartheta(x) = {x}(1-{x}) and |x|,
// their interlacing equality conditions, and the determinant / difference
// operator / symmetrization identities behind them.
#ifndef EHG_INEQUALITIES_HPP
#define EHG_INEQUALITIES_HPP

#include "ehg/logval.hpp"
#include "ehg/rng.hpp"
#include <string>
#include <vector>

namespace ehg {

enum class TriVariant {
    ELL,   // vartheta, equal-length c and d
    ELLC,  // vartheta, +/- symmetric, c has one more entry than d
    COR,   // vartheta, single sequence e
    ABS2,  // |.|, equal-length, deficit vs |sum c - sum d|
    ABS1,  // |.|, c has one more entry than d
};

// Left side minus right side; nonnegative for all real inputs.
Real tri_deficit(TriVariant v, const std::vector<Real>& c, const std::vector<Real>& d);

// Whether the configuration satisfies the variant's interlacing (equality)
// condition, up to the given tolerance on coincidences.
bool interlace_test(TriVariant v, const std::vector<Real>& c, const std::vector<Real>& d,
                    const Real& tol);

enum class IdentityKind {
    FROBENIUS_DET,   // elliptic Cauchy determinant
    SIGN_DET_CAUCHY, // det sign(c_i - d_j) for interlacing sequences
    SIGN_DET_TAU,    // det (tau^{#} sign) variant
    DIFFOP_IC,       // type I difference-operator theta identity
    DIFFOP_IIC,      // type II difference-operator theta identity
    A_TYPE_SYMM,     // S_{n+1} symmetrization identity
};

// Relative (or absolute, for the sign determinants) residual of the identity
// at one pseudorandomly seeded parameter point of size n.
Real identity_residual(IdentityKind kind, int n, CounterRng& rng);

struct SweepReport {
    std::string name;
    int trials = 0;
    int failures = 0;
    Real worst = Real(0);      // most negative deficit or largest residual
    bool passed = true;
};

// Randomized sweeps: nonnegativity of every tri_deficit variant, the
// equivalence deficit==0 <=> interlace_test away from a margin around the
// equality set, and all identity kinds.
std::vector<SweepReport> sweep(uint64_t seed, int trials);

} // namespace ehg

#endif
