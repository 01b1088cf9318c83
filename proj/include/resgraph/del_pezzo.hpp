#pragma once

// Verification of the classification table for del Pezzo surfaces of rank
// one carrying a single non-canonical singular point o, realized by a
// rational curve fibration on the minimal resolution Y.
//
// Each table row is a fiber configuration over the section: a fiber of
// type I(k) is a weight-k curve on the section side, a (-1)-curve, and a
// chain of k-1 (-2)-curves (k+1 components); a fiber of type II is a chain
// of two (-2)-curves from the section forking into a (-2)(-1) branch and a
// single (-2) branch (5 components). The components on the section side
// of the blown-down (-1)-curves assemble the dual graph at o; the far
// chains of I(k) fibers land on Du Val points elsewhere.

#include "resgraph/classify.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resgraph {

struct Fiber {
    enum class Kind { Ik, II };
    Kind kind = Kind::Ik;
    int k = 2; // only for Ik

    static Fiber I(int k);
    static Fiber typeII();

    int components() const { return kind == Kind::Ik ? k + 1 : 5; }
    std::string str() const;

    bool operator==(const Fiber&) const = default;
};

struct FiberConfig {
    int section_weight = 2;
    std::vector<Fiber> fibers;
};

// Fiber class F: the primitive integral kernel vector of the component
// intersection matrix, normalized so the component meeting the section has
// coefficient 1. Satisfies F^2 = 0 and F.E = 0 for every component E.
struct FiberClass {
    DualGraph graph; // fiber components only; contains the (-1)-curve
    RVector coeffs;
};

FiberClass fiber_class(const Fiber& f);

struct AssembledRow {
    int row = 0;
    int n = 0;
    FiberConfig config;
    DualGraph o_graph;
    std::vector<int> extra_duval; // an entry k means an A_k point away from o
    int rho_y = 0;                // 2 + sum over fibers of (components - 1)
};

// Builds the row's surface data for section weight n. Throws DomainError
// when n is outside the row's admissible range.
AssembledRow assemble_row(int row, int n);

struct RowVerification {
    int row = 0;
    int n = 0;
    std::vector<int> extra_duval;
    int rho_y = 0;
    int rho_table = 0;
    Rational k2x_formula;            // table column
    Rational k2x_accounting;         // K_Y^2 - Delta^2 route
    std::optional<Int> mu_sum;       // mu(o) + sum of Du Val Milnor numbers
    std::optional<Rational> noether; // K_X^2 + rho(X) + sum mu, expect 10
    Smoothability existence = Smoothability::Unknown;
    std::string classification;      // classify(o_graph) display
    bool ok = false;
    std::string note;
};

RowVerification verify_row(int row, int n);

// Bounds on n recovered from first principles: the least n whose graph at
// o is negative definite, and the last n whose smoothability verdict is
// not NotSmoothable.
struct DerivedBounds {
    int row = 0;
    int n_min = 0, n_max = 0;
    int table_min = 0, table_max = 0;
    bool ok = false;
};

struct TableVerification {
    std::vector<RowVerification> rows;
    std::vector<DerivedBounds> bounds;
    bool all_ok = false;
};

TableVerification verify_theorem_main();

int row_count();
std::pair<int, int> row_n_range(int row);

} // namespace resgraph
