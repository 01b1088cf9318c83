#include "resgraph/classify.hpp"
#include "resgraph/errors.hpp"

#include <algorithm>
#include <sstream>

namespace resgraph {

const char* to_cstring(SingularityClass::Kind k) {
    using K = SingularityClass::Kind;
    switch (k) {
        case K::DuVal: return "DuVal";
        case K::LogTerminalCyclic: return "LogTerminalCyclic";
        case K::LogTerminalOther: return "LogTerminalOther";
        case K::SimpleElliptic: return "SimpleElliptic";
        case K::Cusp: return "Cusp";
        case K::IndexTwoFork: return "IndexTwoFork";
        case K::IndexHighStar: return "IndexHighStar";
        case K::NotLogCanonical: return "NotLogCanonical";
    }
    return "?";
}

const char* to_cstring(Smoothability s) {
    switch (s) {
        case Smoothability::Smoothable: return "Smoothable";
        case Smoothability::NotSmoothable: return "NotSmoothable";
        case Smoothability::Unknown: return "Unknown";
    }
    return "?";
}

std::string SingularityClass::str() const {
    std::ostringstream os;
    auto list = [&os](const std::vector<int>& w) {
        os << '[';
        for (size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
        os << ']';
    };
    switch (kind) {
        case Kind::DuVal: os << ade; break;
        case Kind::LogTerminalCyclic:
            os << "1/" << cyclic->r << "(1," << cyclic->q << ")";
            break;
        case Kind::LogTerminalOther: os << "log terminal (non-cyclic)"; break;
        case Kind::SimpleElliptic: os << "simple elliptic, -E^2=" << elliptic_weight; break;
        case Kind::Cusp:
            os << "cusp ";
            list(cycle_weights);
            break;
        case Kind::IndexTwoFork:
            os << '[';
            for (size_t i = 0; i < spine.size(); ++i) os << (i ? "," : "") << spine[i];
            os << ";[2]^4]";
            break;
        case Kind::IndexHighStar: {
            os << '<' << star_n << ';';
            for (size_t i = 0; i < arm_types.size(); ++i) os << (i ? "," : "") << arm_types[i].r;
            os << ';';
            for (size_t i = 0; i < arm_types.size(); ++i) os << (i ? "," : "") << arm_types[i].q;
            os << '>';
            break;
        }
        case Kind::NotLogCanonical: os << "not log canonical"; break;
    }
    return os.str();
}

namespace {

std::string ade_symbol(const GraphShape& shape) {
    if (shape.kind == GraphShape::Kind::Chain)
        return "A" + std::to_string(shape.weights.size());
    if (shape.kind == GraphShape::Kind::Star && shape.arms.size() == 3) {
        std::vector<size_t> len{shape.arms[0].size(), shape.arms[1].size(), shape.arms[2].size()};
        std::sort(len.begin(), len.end());
        if (len[0] == 1 && len[1] == 1) return "D" + std::to_string(len[2] + 3);
        if (len[0] == 1 && len[1] == 2 && len[2] == 2) return "E6";
        if (len[0] == 1 && len[1] == 2 && len[2] == 3) return "E7";
        if (len[0] == 1 && len[1] == 2 && len[2] == 4) return "E8";
    }
    throw std::logic_error("vanishing codiscrepancy on a non-ADE graph");
}

} // namespace

SingularityClass classify(const DualGraph& g) {
    const Codiscrepancy d = codiscrepancy(g);
    const GraphShape shape = recognize_shape(g);

    SingularityClass cls;
    cls.index = d.index;

    if (d.max_coeff > 1) {
        cls.kind = SingularityClass::Kind::NotLogCanonical;
        return cls;
    }

    if (d.max_coeff < 1) {
        if (d.max_coeff == 0) {
            cls.kind = SingularityClass::Kind::DuVal;
            cls.ade = ade_symbol(shape);
            return cls;
        }
        if (shape.kind == GraphShape::Kind::Chain) {
            cls.kind = SingularityClass::Kind::LogTerminalCyclic;
            cls.cyclic = from_chain(shape.weights);
            return cls;
        }
        cls.kind = SingularityClass::Kind::LogTerminalOther;
        return cls;
    }

    // Strictly log canonical.
    switch (shape.kind) {
        case GraphShape::Kind::EllipticVertex:
            cls.kind = SingularityClass::Kind::SimpleElliptic;
            cls.elliptic_weight = shape.weights.at(0);
            return cls;
        case GraphShape::Kind::Cycle:
            cls.kind = SingularityClass::Kind::Cusp;
            cls.cycle_weights = shape.weights;
            return cls;
        case GraphShape::Kind::ForkedChain:
            cls.kind = SingularityClass::Kind::IndexTwoFork;
            cls.spine = shape.weights;
            cls.dv = DvKind::DV;
            if (cls.index != 2)
                throw std::logic_error("forked chain with codiscrepancy index != 2");
            return cls;
        case GraphShape::Kind::Star: {
            if (shape.arms.size() != 3)
                throw std::logic_error("strictly log canonical star without three arms");
            cls.kind = SingularityClass::Kind::IndexHighStar;
            cls.star_n = shape.center;
            Rational inv_sum = 0;
            Int l = 1;
            for (const auto& arm : shape.arms) {
                const CyclicType t = from_chain(arm);
                inv_sum += Rational(1, t.r);
                l = boost::multiprecision::lcm(l, t.r);
                cls.arm_types.push_back(t);
            }
            if (inv_sum != 1 || Rational(l) != Rational(cls.index))
                throw std::logic_error("strictly log canonical star with inconsistent arm data");
            cls.star_index = static_cast<int>(l);
            const bool dv = std::all_of(cls.arm_types.begin(), cls.arm_types.end(),
                                        [](const CyclicType& t) { return (t.q + 1) % t.r == 0; });
            const bool ndv = std::all_of(cls.arm_types.begin(), cls.arm_types.end(),
                                         [](const CyclicType& t) { return t.q == 1; });
            cls.dv = dv ? DvKind::DV : ndv ? DvKind::NDV : DvKind::Mixed;
            std::sort(cls.arm_types.begin(), cls.arm_types.end(),
                      [](const CyclicType& a, const CyclicType& b) {
                          return a.r != b.r ? a.r < b.r : a.q < b.q;
                      });
            return cls;
        }
        default:
            throw std::logic_error("strictly log canonical graph outside the known shapes");
    }
}

namespace {

Verdict verdict(Smoothability s, std::string why, std::optional<Int> mu = std::nullopt) {
    return Verdict{s, std::move(why), std::move(mu)};
}

Int integral_milnor(const DualGraph& g) {
    const MilnorNumber m = milnor_number(g);
    if (!m.integral) throw std::logic_error("expected an integral Milnor number");
    return numerator(m.value);
}

} // namespace

Verdict smoothability(const DualGraph& g) { return smoothability(g, classify(g)); }

Verdict smoothability(const DualGraph& g, const SingularityClass& cls) {
    using K = SingularityClass::Kind;
    switch (cls.kind) {
        case K::DuVal:
            return verdict(Smoothability::Smoothable,
                           "rational double point; hypersurface smoothing", integral_milnor(g));

        case K::LogTerminalCyclic: {
            const TClassification t = t_singularity_params(*cls.cyclic);
            if (t.kind == TClassification::Kind::T)
                return verdict(Smoothability::Smoothable,
                               "cyclic quotient satisfying (q+1)^2 = 0 mod r "
                               "(Kollar, Shepherd-Barron; Wahl)",
                               integral_milnor(g));
            return verdict(Smoothability::NotSmoothable,
                           "cyclic quotient failing the congruence (q+1)^2 = 0 mod r");
        }

        case K::LogTerminalOther:
            return verdict(Smoothability::NotSmoothable,
                           "log terminal but not cyclic; Q-Gorenstein smoothable quotients "
                           "are Du Val or cyclic");

        case K::SimpleElliptic:
            if (cls.elliptic_weight <= 9)
                return verdict(Smoothability::Smoothable,
                               "simple elliptic of multiplicity <= 9 (Pinkham; Looijenga, Wahl); "
                               "Milnor number formula does not apply to non-rational points");
            return verdict(Smoothability::NotSmoothable,
                           "simple elliptic with -E^2 > 9 has no smoothing");

        case K::Cusp: {
            const Codiscrepancy d = codiscrepancy(g);
            const Int mult = std::max(Int(2), Int(numerator(Rational(-d.k2))));
            if (mult > Int(g.size()) + 9)
                return verdict(Smoothability::NotSmoothable,
                               "cusp multiplicity exceeds the bound mult <= (exceptional curves) + 9 "
                               "(Wahl)");
            return verdict(Smoothability::Unknown,
                           "cusp within the multiplicity bound; the necessary condition is "
                           "not sufficient");
        }

        case K::IndexTwoFork: {
            int sum2 = 0, sum3 = 0;
            for (int w : cls.spine) {
                sum2 += w - 2;
                sum3 += w - 3;
            }
            if (sum3 > 3)
                return verdict(Smoothability::NotSmoothable,
                               "index-one cover is a cusp of multiplicity above the Wahl bound");

            std::vector<std::string> reasons;
            if (cls.spine.size() == 1 && cls.spine[0] <= 6)
                reasons.push_back("index-one cover is a smoothable simple elliptic singularity "
                                  "and the smoothing descends");
            if (sum2 <= 2)
                reasons.push_back("rational of index 2 and multiplicity 4 (Stevens)");
            const GraphShape sp = GraphShape::forked_chain(cls.spine);
            if (sp == GraphShape::forked_chain({4, 3}) || sp == GraphShape::forked_chain({3, 3, 3}))
                reasons.push_back("explicit Q-Gorenstein smoothing (de Jong, van Straten)");
            if (!reasons.empty()) {
                std::string why;
                for (size_t i = 0; i < reasons.size(); ++i) why += (i ? "; " : "") + reasons[i];
                return verdict(Smoothability::Smoothable, why, integral_milnor(g));
            }
            return verdict(Smoothability::Unknown, "no known smoothing construction applies "
                                                   "and no obstruction is known");
        }

        case K::IndexHighStar: {
            if (cls.dv == DvKind::Mixed)
                return verdict(Smoothability::NotSmoothable,
                               "mixed arm types give non-integral K^2");
            if (cls.dv == DvKind::DV)
                return verdict(Smoothability::NotSmoothable,
                               "at index >= 3 only single-curve arms admit Q-Gorenstein "
                               "smoothings");
            const Int mu = integral_milnor(g);
            if (mu < 0)
                return verdict(Smoothability::NotSmoothable,
                               "Milnor number of a smoothing would be negative");
            return verdict(Smoothability::Smoothable,
                           "explicit quotient construction of a Q-Gorenstein smoothing", mu);
        }

        case K::NotLogCanonical:
            return verdict(Smoothability::Unknown, "not log canonical; outside the classification");
    }
    throw std::logic_error("unhandled singularity class");
}

bool rationality(const DualGraph& g) {
    const bool rational = fundamental_cycle(g).rational;
    const Codiscrepancy d = codiscrepancy(g);
    if (d.max_coeff == 1 && rational != (d.index > 1))
        throw std::logic_error("rationality disagrees with the index dichotomy");
    return rational;
}

SweepSummary classification_sweep(int max_vertices, int max_weight) {
    if (max_vertices < 1 || max_weight < 2)
        throw DomainError("sweep needs max_vertices >= 1 and max_weight >= 2");
    SweepSummary s;
    s.max_vertices = max_vertices;
    s.max_weight = max_weight;

    auto visit = [&](const DualGraph& g) {
        ++s.graphs;
        if (is_negative_definite(g) != Definiteness::Definite) {
            ++s.not_contractible;
            return;
        }
        const SingularityClass cls = classify(g);
        ++s.by_kind[to_cstring(cls.kind)];
        switch (smoothability(g, cls).status) {
            case Smoothability::Smoothable: ++s.smoothable; break;
            case Smoothability::NotSmoothable: ++s.not_smoothable; break;
            case Smoothability::Unknown: ++s.unknown; break;
        }
    };

    // Odometer over weight vectors of a fixed length.
    auto enumerate = [&](int len, auto&& build) {
        std::vector<int> w(static_cast<size_t>(len), 2);
        for (;;) {
            build(w);
            size_t i = 0;
            while (i < w.size() && w[i] == max_weight) w[i++] = 2;
            if (i == w.size()) break;
            ++w[i];
        }
    };

    for (int len = 1; len <= max_vertices; ++len)
        enumerate(len, [&](const std::vector<int>& w) { visit(chain_graph(w)); });
    for (int len = 1; len + 4 <= max_vertices; ++len)
        enumerate(len, [&](const std::vector<int>& w) { visit(fork_graph(w)); });
    return s;
}

} // namespace resgraph
