#include "resgraph/invariants.hpp"
#include "resgraph/errors.hpp"

#include <algorithm>
#include <numeric>

namespace resgraph {

const char* to_cstring(DvKind k) {
    switch (k) {
        case DvKind::DV: return "DV";
        case DvKind::NDV: return "nDV";
        case DvKind::Mixed: return "mixed";
        case DvKind::None: return "none";
    }
    return "?";
}

Codiscrepancy codiscrepancy(const DualGraph& g) {
    if (is_negative_definite(g) != Definiteness::Definite)
        throw NotContractible("intersection form is not negative definite");

    const Eigen::Index n = g.size();
    const RMatrix m = intersection_matrix_q(g);
    RVector b(n);
    for (Eigen::Index i = 0; i < n; ++i)
        b(i) = Rational(2 - 2 * g.vertex(i).genus - g.vertex(i).weight);

    Codiscrepancy out;
    out.delta = solve_negative_definite(m, b);
    out.k2 = out.delta.dot(b); // Delta.(M Delta) = Delta.b
    out.index = denominator_lcm(out.delta);
    out.max_coeff = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (out.delta(i) < 0)
            throw std::logic_error("codiscrepancy came out negative");
        out.max_coeff = std::max(out.max_coeff, out.delta(i));
    }
    return out;
}

namespace {

// Reduces a star to the arm data ((r1,q1),(r2,q2),(r3,q3)) if it has
// exactly three arms.
std::optional<std::vector<CyclicType>> star_arm_types(const GraphShape& s) {
    if (s.kind != GraphShape::Kind::Star || s.arms.size() != 3) return std::nullopt;
    std::vector<CyclicType> t;
    for (const auto& arm : s.arms) t.push_back(from_chain(arm));
    return t;
}

bool arm_is_duval(const CyclicType& t) { return (t.q + 1) % t.r == 0; }
bool arm_is_single(const CyclicType& t) { return t.q == 1; }

} // namespace

std::optional<Rational> k2_closed_form(const GraphShape& shape) {
    if (shape.kind == GraphShape::Kind::ForkedChain) {
        Rational s = 0;
        for (int w : shape.weights) s += w - 2;
        return -s;
    }
    const auto arms = star_arm_types(shape);
    if (!arms) throw ShapeMismatch("closed form needs a forked chain or a three-arm star");

    std::vector<Int> rs{(*arms)[0].r, (*arms)[1].r, (*arms)[2].r};
    std::sort(rs.begin(), rs.end());
    const bool unit_sum = Rational(1, rs[0]) + Rational(1, rs[1]) + Rational(1, rs[2]) == 1;
    if (!unit_sum)
        throw ShapeMismatch("star arm orders must satisfy 1/r1 + 1/r2 + 1/r3 = 1");

    const bool dv = std::all_of(arms->begin(), arms->end(), arm_is_duval);
    const bool ndv = std::all_of(arms->begin(), arms->end(), arm_is_single);
    if (dv) return Rational(-(shape.center - 2));
    if (ndv) {
        Int s = shape.center - 9;
        for (const auto& t : *arms) s += t.r;
        return Rational(-s);
    }
    return std::nullopt;
}

Rational chain_delta_contribution(ArmKind kind, int param) {
    switch (kind) {
        case ArmKind::DuValChain:
            if (param < 1) throw DomainError("chain length must be >= 1");
            return Rational(param, param + 1);
        case ArmKind::SingleVertex:
            if (param < 2) throw DomainError("curve weight must be >= 2");
            return Rational((param - 1) * (3 - param), param);
    }
    throw DomainError("unknown arm kind");
}

FundamentalCycle fundamental_cycle(const DualGraph& g) {
    if (is_negative_definite(g) != Definiteness::Definite)
        throw NotContractible("intersection form is not negative definite");

    const Eigen::Index n = g.size();
    const RMatrix m = intersection_matrix_q(g);
    RVector z = RVector::Constant(n, 1);
    for (;;) {
        const RVector mz = m * z;
        Eigen::Index hit = -1;
        for (Eigen::Index i = 0; i < n; ++i)
            if (mz(i) > 0) { hit = i; break; }
        if (hit < 0) break;
        z(hit) += 1;
    }

    FundamentalCycle out;
    out.z = z;
    out.z2 = (z.transpose() * m * z)(0, 0);
    out.pa = arithmetic_genus(g, z);
    out.rational = out.pa == 0;
    const Int minus_z2 = numerator(Rational(-out.z2));
    out.mult = out.rational ? minus_z2 : std::max(Int(2), minus_z2);
    return out;
}

MilnorNumber milnor_number(const DualGraph& g) {
    const Codiscrepancy d = codiscrepancy(g);
    MilnorNumber out;
    out.value = d.k2 + Rational(g.size());
    out.integral = is_integer(out.value);
    return out;
}

IndexOneCover index_one_cover_k2(const GraphShape& shape, DvKind kind, int index, int n) {
    if (index != 2 && index != 3 && index != 4 && index != 6)
        throw DomainError("index must be one of 2, 3, 4, 6");
    if (kind != DvKind::DV && kind != DvKind::NDV)
        throw DomainError("index-one cover formulas need a DV or nDV shape");

    if (shape.kind == GraphShape::Kind::ForkedChain) {
        if (index != 2 || kind != DvKind::DV)
            throw ShapeMismatch("a forked chain has index 2 and Du Val arms");
        int derived = 2;
        for (int w : shape.weights) derived += w - 2;
        if (derived != n) throw ShapeMismatch("n does not match the spine");
    } else if (shape.kind == GraphShape::Kind::Star) {
        if (index == 2) throw ShapeMismatch("index 2 belongs to forked chains");
        if (shape.center != n) throw ShapeMismatch("n does not match the star centre");
    } else {
        throw ShapeMismatch("index-one cover formulas need a forked chain or star");
    }

    IndexOneCover out;
    out.minus_k2 = Int(index) * (kind == DvKind::DV ? n - 2 : n - 1);
    out.mult = std::max(Int(2), out.minus_k2);
    out.embdim = std::max(Int(3), out.minus_k2);
    return out;
}

TSweep sweep_t_singularities(int max_r) {
    if (max_r < 2) throw DomainError("T-singularity sweep needs max_r >= 2");
    TSweep s;
    s.max_r = max_r;
    for (int r = 2; r <= max_r; ++r) {
        for (int q = 1; q < r; ++q) {
            if (std::gcd(r, q) != 1) continue;
            ++s.types;
            const CyclicType c{r, q};
            const TClassification tc = t_singularity_params(c);
            const Codiscrepancy d = codiscrepancy(chain_graph(to_chain(c)));
            const bool admits_smoothing = tc.kind != TClassification::Kind::NotT;
            if (is_integer(d.k2) != admits_smoothing) s.k2_integral_iff_t = false;
            switch (tc.kind) {
                case TClassification::Kind::DuVal: ++s.du_val; break;
                case TClassification::Kind::T:
                    ++s.t;
                    s.t_types.emplace_back(c, *tc.params);
                    break;
                case TClassification::Kind::NotT: ++s.not_t; break;
            }
        }
    }
    return s;
}

Rational c_anticanonical(const DualGraph& g) {
    const Codiscrepancy d = codiscrepancy(g);
    if (!d.log_canonical())
        throw DomainError("anticanonical defect is defined for log canonical graphs");
    if (!fundamental_cycle(g).rational)
        throw DomainError("anticanonical defect is defined for rational singularities");

    const RMatrix m = intersection_matrix_q(g);
    const RVector up = ceil_vec(d.delta);
    const RVector frac = up - d.delta; // fractional part of -Delta

    // Definition: -(1/2) <D.> . (round_down(pullback D) - K) for D the
    // local anticanonical cycle, written against the exceptional basis
    // with K.E_i from adjunction.
    Rational c_def = 0;
    const RVector mup = m * up;
    for (Eigen::Index i = 0; i < g.size(); ++i) {
        const Rational k_ei = Rational(2 * g.vertex(i).genus - 2 + g.vertex(i).weight);
        c_def += frac(i) * (-2 * k_ei - mup(i));
    }
    c_def = -c_def / 2;

    // Closed form; Delta = 0 makes the fractional part vanish identically.
    Rational c_closed = 0;
    if (d.max_coeff != 0) {
        const Rational up2 = (up.transpose() * m * up)(0, 0);
        c_closed = d.k2 - up2 - 3;
    }
    if (c_def != c_closed)
        throw std::logic_error("anticanonical defect: definition and closed form disagree");
    return c_closed;
}

} // namespace resgraph
