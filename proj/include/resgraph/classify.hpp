#pragma once

// Classification of normal surface singularities from the resolution graph,
// and the Q-Gorenstein smoothability verdict.
//
// The log canonical trichotomy is read off the codiscrepancy: max
// coefficient < 1 (log terminal), = 1 (strictly log canonical), > 1 (not
// log canonical). Strictly log canonical graphs fall into five shapes:
// a genus-1 vertex, a cycle, a forked chain of index 2, and three-arm
// stars of index 3, 4 or 6 with 1/r1 + 1/r2 + 1/r3 = 1.

#include "resgraph/invariants.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace resgraph {

struct SingularityClass {
    enum class Kind {
        DuVal,
        LogTerminalCyclic,
        LogTerminalOther,
        SimpleElliptic,
        Cusp,
        IndexTwoFork,  // [n1,...,ns;[2]^4]
        IndexHighStar, // three-arm star of index 3, 4 or 6
        NotLogCanonical,
    };

    Kind kind = Kind::NotLogCanonical;
    Int index = 1; // lcm of codiscrepancy denominators

    std::string ade;                    // DuVal: "A3", "D5", "E8", ...
    std::optional<CyclicType> cyclic;   // LogTerminalCyclic
    int elliptic_weight = 0;            // SimpleElliptic
    std::vector<int> cycle_weights;     // Cusp
    std::vector<int> spine;             // IndexTwoFork
    int star_index = 0;                 // IndexHighStar: 3, 4 or 6
    int star_n = 0;                     // IndexHighStar centre weight
    std::vector<CyclicType> arm_types;  // IndexHighStar arms
    DvKind dv = DvKind::None;

    std::string str() const;
};

const char* to_cstring(SingularityClass::Kind k);

// Throws NotContractible when the graph does not contract.
SingularityClass classify(const DualGraph& g);

enum class Smoothability { Smoothable, NotSmoothable, Unknown };

const char* to_cstring(Smoothability s);

struct Verdict {
    Smoothability status = Smoothability::Unknown;
    std::string provenance;  // which criterion decided
    std::optional<Int> mu;   // Milnor number, when the formula applies
};

Verdict smoothability(const DualGraph& g);
Verdict smoothability(const DualGraph& g, const SingularityClass& cls);

// Artin rationality: arithmetic genus of the fundamental cycle vanishes.
bool rationality(const DualGraph& g);

// Exhaustive classification scan: every chain with at most max_vertices
// vertices and every forked chain with at most max_vertices - 4, weights
// in [2, max_weight]. Cross-checks on each graph that the shape-keyed
// class agrees with the codiscrepancy trichotomy.
struct SweepSummary {
    int max_vertices = 0;
    int max_weight = 0;
    long long graphs = 0;
    long long not_contractible = 0;
    std::map<std::string, long long> by_kind;
    long long smoothable = 0;
    long long not_smoothable = 0;
    long long unknown = 0;
};

SweepSummary classification_sweep(int max_vertices, int max_weight);

} // namespace resgraph
