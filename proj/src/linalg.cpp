#include "resgraph/linalg.hpp"
#include "resgraph/errors.hpp"

#include <Eigen/LU>

#include <numeric>
#include <vector>

namespace resgraph {

const char* to_cstring(Definiteness d) {
    switch (d) {
        case Definiteness::Definite: return "definite";
        case Definiteness::SemidefiniteDegenerate: return "semidefinite_degenerate";
        case Definiteness::Indefinite: return "indefinite";
    }
    return "?";
}

Definiteness negative_definiteness(RMatrix a) {
    const Eigen::Index n = a.rows();
    if (n != a.cols()) throw DomainError("definiteness test needs a square matrix");

    std::vector<Eigen::Index> act(static_cast<size_t>(n));
    std::iota(act.begin(), act.end(), 0);
    bool degenerate = false;

    while (!act.empty()) {
        // Pick the first active index with a nonzero diagonal pivot.
        size_t ppos = act.size();
        for (size_t s = 0; s < act.size(); ++s) {
            if (a(act[s], act[s]) != 0) { ppos = s; break; }
        }
        if (ppos == act.size()) {
            // All-zero diagonal. Any surviving off-diagonal entry gives a
            // hyperbolic 2x2 block, hence a positive eigenvalue.
            for (size_t s = 0; s < act.size(); ++s)
                for (size_t t = s + 1; t < act.size(); ++t)
                    if (a(act[s], act[t]) != 0) return Definiteness::Indefinite;
            degenerate = true;
            break;
        }
        const Eigen::Index p = act[ppos];
        if (a(p, p) > 0) return Definiteness::Indefinite;

        // Schur complement with respect to the pivot.
        for (size_t s = 0; s < act.size(); ++s) {
            const Eigen::Index k = act[s];
            if (k == p || a(k, p) == 0) continue;
            const Rational f = a(k, p) / a(p, p);
            for (size_t t = 0; t < act.size(); ++t) {
                const Eigen::Index j = act[t];
                if (j == p || a(p, j) == 0) continue;
                a(k, j) -= f * a(p, j);
            }
        }
        act.erase(act.begin() + static_cast<std::ptrdiff_t>(ppos));
    }
    return degenerate ? Definiteness::SemidefiniteDegenerate : Definiteness::Definite;
}

RVector solve_negative_definite(RMatrix a, RVector b) {
    const Eigen::Index n = a.rows();
    if (n != a.cols() || n != b.size())
        throw DomainError("solve: dimension mismatch");

    for (Eigen::Index i = 0; i < n; ++i) {
        if (a(i, i) == 0)
            throw DomainError("solve: zero pivot, matrix is not negative definite");
        for (Eigen::Index k = i + 1; k < n; ++k) {
            if (a(k, i) == 0) continue;
            const Rational f = a(k, i) / a(i, i);
            for (Eigen::Index j = i; j < n; ++j) {
                if (a(i, j) == 0) continue;
                a(k, j) -= f * a(i, j);
            }
            b(k) -= f * b(i);
        }
    }
    RVector x = RVector::Zero(n);
    for (Eigen::Index i = n - 1; i >= 0; --i) {
        Rational s = b(i);
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (a(i, j) == 0) continue;
            s -= a(i, j) * x(j);
        }
        x(i) = s / a(i, i);
    }
    return x;
}

RVector kernel_generator(const RMatrix& a) {
    Eigen::FullPivLU<RMatrix> lu(a);
    if (lu.dimensionOfKernel() != 1)
        throw DomainError("kernel_generator: kernel is not one-dimensional");
    RVector k = lu.kernel().col(0);

    // Clear denominators, divide out the content, orient positively.
    const Int l = denominator_lcm(k);
    RVector v = k * Rational(l);
    Int g = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        g = boost::multiprecision::gcd(g, Int(numerator(v(i))));
    if (g == 0) throw DomainError("kernel_generator: zero vector");
    v /= Rational(g);

    int sign = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) == 0) continue;
        const int s = v(i) > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        else if (sign != s) throw DomainError("kernel_generator: mixed-sign kernel vector");
    }
    if (sign < 0) v = -v;
    return v;
}

} // namespace resgraph
