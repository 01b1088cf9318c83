#pragma once

// Exact linear algebra on symmetric rational matrices. Everything here is
// elimination based; no numerics, no tolerances.

#include "resgraph/rational.hpp"

namespace resgraph {

// Trichotomy for the negative-definiteness test of a symmetric form.
enum class Definiteness {
    Definite,               // negative definite
    SemidefiniteDegenerate, // negative semidefinite with nontrivial kernel
    Indefinite,             // has a positive direction
};

const char* to_cstring(Definiteness d);

// Classifies a symmetric matrix by inertia, computed with symmetric
// Gaussian elimination over Q (congruence transforms, so pivot signs are
// eigenvalue signs). Early-outs on the first positive pivot.
Definiteness negative_definiteness(RMatrix a);

// Solves a x = b for negative definite a. Elimination without pivoting is
// exact here because every leading principal minor is nonzero.
RVector solve_negative_definite(RMatrix a, RVector b);

// One-dimensional kernel of a corank-1 matrix, scaled to a primitive
// integer vector with positive entries. Throws DomainError if the kernel
// is not one-dimensional or mixes signs.
RVector kernel_generator(const RMatrix& a);

} // namespace resgraph
