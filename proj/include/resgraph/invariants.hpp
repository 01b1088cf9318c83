#pragma once

// Numerical invariants of a contracted singularity, computed on the
// resolution graph.
//
// The codiscrepancy Delta is the exceptional Q-divisor with
// K_Y = (pullback of K_X) - Delta, determined by (M Delta)_i = b_i where
// b_i = 2 - 2 genus_i - weight_i (adjunction). K^2 below always means the
// local correction term Delta.Delta <= 0, so -K^2 >= 0.

#include "resgraph/graph.hpp"
#include "resgraph/hj.hpp"

#include <optional>

namespace resgraph {

struct Codiscrepancy {
    RVector delta;      // componentwise >= 0
    Rational k2;        // Delta.Delta
    Int index;          // lcm of coefficient denominators
    Rational max_coeff; // log canonical iff <= 1, log terminal iff < 1

    bool log_canonical() const { return max_coeff <= 1; }
    bool log_terminal() const { return max_coeff < 1; }
};

// Throws NotContractible unless the intersection form is negative definite.
Codiscrepancy codiscrepancy(const DualGraph& g);

// Whether an arm of a plt star is a Du Val chain or a single curve; Mixed
// and None cover the remaining classification outcomes.
enum class DvKind { DV, NDV, Mixed, None };

const char* to_cstring(DvKind k);

// Closed form for K^2 on the strictly log canonical shapes with integral
// K^2: a forked chain [n1,...,ns;[2]^4] gives -sum(ni - 2); a three-arm
// star with arm orders (3,3,3), (2,4,4) or (2,3,6) gives -(n-2) when every
// arm is a Du Val chain and -(n - 9 + sum ri) when every arm is a single
// curve. Mixed arm patterns have non-integral K^2: returns nullopt.
// Throws ShapeMismatch for any other shape.
std::optional<Rational> k2_closed_form(const GraphShape& shape);

// Contribution D^2 - C^2 of one arm to the plt adjunction bookkeeping:
// a chain of m (-2)-curves contributes m/(m+1); a single (-r)-curve
// contributes (r-1)(3-r)/r.
enum class ArmKind { DuValChain, SingleVertex };
Rational chain_delta_contribution(ArmKind kind, int param);

struct FundamentalCycle {
    RVector z;     // integral, >= reduced cycle
    Rational z2;   // Z.Z
    Int pa;        // arithmetic genus of Z; 0 iff the singularity is rational
    Int mult;      // -Z^2 when rational, else max(2, -Z^2)
    bool rational; // pa == 0
};

// Computation of the smallest cycle Z > 0 with Z.E_i <= 0 for all i:
// start from the reduced cycle and repeatedly add the lowest-indexed E_i
// with Z.E_i > 0. The result does not depend on that choice.
FundamentalCycle fundamental_cycle(const DualGraph& g);

struct MilnorNumber {
    Rational value; // K^2 + number of exceptional curves
    bool integral;
};

// The value is meaningful as a Milnor fibre invariant only for rational
// singularities with a smoothing of the right kind; it is computed
// unconditionally and qualified by the caller.
MilnorNumber milnor_number(const DualGraph& g);

struct IndexOneCover {
    Int minus_k2; // -K^2 of the index-one cover
    Int mult;     // max(2, -K^2), the multiplicity when the cover is a cusp
    Int embdim;   // max(3, -K^2)
};

// -K^2 of the index-one cover of a strictly log canonical singularity of
// the given index: I(n-2) in the Du Val armed cases, I(n-1) in the single
// curve armed cases.
IndexOneCover index_one_cover_k2(const GraphShape& shape, DvKind kind, int index, int n);

// Exhaustive scan of the cyclic quotient types 1/r(1,q), 2 <= r <= max_r,
// gcd(r,q) = 1: counts per T-classification, the list of T types with
// their (d,n,a) parameters, and the cross-check that K^2 is an integer
// exactly for the Du Val and T types.
struct TSweep {
    int max_r = 0;
    long long types = 0;
    long long du_val = 0;
    long long t = 0;
    long long not_t = 0;
    bool k2_integral_iff_t = true;
    std::vector<std::pair<CyclicType, TParams>> t_types;
};

TSweep sweep_t_singularities(int max_r);

// Defect of the anticanonical cycle: computed both from the definition
// (intersection of the fractional part of the pulled-back anticanonical
// divisor against its round-down minus K) and from the closed form
// Delta^2 - ceil(Delta)^2 - 3 (value 0 when Delta = 0); the two must
// agree. Requires a rational log canonical graph.
Rational c_anticanonical(const DualGraph& g);

} // namespace resgraph
