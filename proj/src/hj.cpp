#include "resgraph/hj.hpp"
#include "resgraph/errors.hpp"

#include <limits>

namespace resgraph {

namespace {

void check_type(const CyclicType& t) {
    if (t.r < 2 || t.q < 1 || t.q >= t.r)
        throw DomainError("cyclic type needs 0 < q < r, r >= 2");
    if (boost::multiprecision::gcd(t.r, t.q) != 1)
        throw DomainError("cyclic type needs gcd(r,q) = 1");
}

Int ceil_div(const Int& a, const Int& b) { // b > 0
    return (a + b - 1) / b;
}

// x^(-1) mod m by the extended Euclidean algorithm.
Int inverse_mod(Int x, const Int& m) {
    x %= m;
    if (x < 0) x += m;
    Int r0 = m, r1 = x, s0 = 0, s1 = 1;
    while (r1 != 0) {
        const Int k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        s0 -= k * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) throw DomainError("not invertible modulo m");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

} // namespace

std::vector<int> to_chain(const CyclicType& t) {
    check_type(t);
    std::vector<int> w;
    Int r = t.r, q = t.q;
    while (q > 0) {
        const Int n = ceil_div(r, q);
        if (n > std::numeric_limits<int>::max())
            throw DomainError("chain weight exceeds the representable range");
        w.push_back(static_cast<int>(n));
        const Int q2 = n * q - r;
        r = q;
        q = q2;
    }
    return w;
}

CyclicType from_chain(const std::vector<int>& weights) {
    if (weights.empty()) throw DomainError("empty weight chain");
    Int r = weights.back(), q = 1;
    if (r < 2) throw DomainError("chain weights must be >= 2");
    for (size_t i = weights.size() - 1; i-- > 0;) {
        if (weights[i] < 2) throw DomainError("chain weights must be >= 2");
        const Int r2 = weights[i] * r - q;
        q = r;
        r = r2;
    }
    return {r, q};
}

CyclicType dual(const CyclicType& t) {
    check_type(t);
    return {t.r, t.r - t.q};
}

CyclicType swap_orientation(const CyclicType& t) {
    check_type(t);
    return {t.r, inverse_mod(t.q, t.r)};
}

CyclicType normalize_cyclic(const Int& m, const Int& q1, const Int& q2) {
    if (m < 2) throw DomainError("cyclic order must be >= 2");
    if (boost::multiprecision::gcd(m, q1) != 1 || boost::multiprecision::gcd(m, q2) != 1)
        throw DomainError("quotient weights must be prime to the order");
    Int q = (q2 % m) * inverse_mod(q1, m) % m;
    if (q < 0) q += m;
    if (q == 0) throw DomainError("degenerate quotient type");
    return {m, q};
}

TClassification t_singularity_params(const CyclicType& t) {
    check_type(t);
    TClassification out;
    if (t.q == t.r - 1) {
        out.kind = TClassification::Kind::DuVal;
        return out;
    }
    const Int s = t.q + 1;
    if (s * s % t.r != 0) {
        out.kind = TClassification::Kind::NotT;
        return out;
    }
    // Put g = gcd(s,r), a = s/g, n = r/g, so a and n are coprime. From
    // s^2 = 0 mod r we get n | g a^2, hence n | g, and d = g/n satisfies
    // r = d n^2, s = d n a.
    const Int g = boost::multiprecision::gcd(s, t.r);
    const Int a = s / g;
    const Int n = t.r / g;
    if (g % n != 0) throw std::logic_error("T-parameter extraction failed");
    const Int d = g / n;
    out.kind = TClassification::Kind::T;
    out.params = TParams{d, n, a};
    return out;
}

} // namespace resgraph
