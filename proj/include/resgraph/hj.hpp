#pragma once

// Hirzebruch-Jung continued fractions and cyclic quotient types.
//
// A cyclic quotient singularity 1/r(1,q) with 0 < q < r, gcd(r,q) = 1
// resolves into a chain [n1,...,ns] with r/q = n1 - 1/(n2 - 1/(... - 1/ns)),
// every ni >= 2. The general type 1/m(q1,q2) is normalized to this form by
// multiplying the weights by the inverse of q1 mod m.

#include "resgraph/rational.hpp"

#include <optional>
#include <vector>

namespace resgraph {

struct CyclicType {
    Int r;
    Int q;

    bool operator==(const CyclicType&) const = default;
};

// Expansion of r/q; weights satisfy ni >= 2, computed by
// n = ceil(r/q), (r,q) <- (q, n q - r).
std::vector<int> to_chain(const CyclicType& t);

// Evaluates a weight chain back to the reduced fraction r/q.
CyclicType from_chain(const std::vector<int>& weights);

// 1/r(1,q) and 1/r(1,q') with q q' = 1 mod r are the same singularity with
// the chain read from the other end; 1/r(1,r-q) is the dual (cone over the
// complementary cone).
CyclicType dual(const CyclicType& t);
CyclicType swap_orientation(const CyclicType& t);

// Normalizes 1/m(q1,q2) to 1/m(1,q).
CyclicType normalize_cyclic(const Int& m, const Int& q1, const Int& q2);

// Parameters of a T-singularity 1/(d n^2)(1, d n a - 1), gcd(a,n) = 1.
struct TParams {
    Int d;
    Int n;
    Int a;

    bool operator==(const TParams&) const = default;
};

// Outcome of the T-singularity test (q+1)^2 = 0 mod r. Du Val chains
// (q = r-1) satisfy the congruence trivially and are reported apart.
struct TClassification {
    enum class Kind { DuVal, T, NotT };
    Kind kind = Kind::NotT;
    std::optional<TParams> params; // set exactly when kind == T
};

TClassification t_singularity_params(const CyclicType& t);

} // namespace resgraph
