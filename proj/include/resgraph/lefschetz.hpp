#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N) and the two-fixed-point
// holomorphic Lefschetz equation
//
//   1 = 1/((1-zeta^r)(1-zeta^k)) + 1/((1-zeta^l)(1-zeta^m))
//
// solved by brute force over nonzero exponent classes mod N.

#include "resgraph/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace resgraph {

// Coefficients of the N-th cyclotomic polynomial, ascending degree,
// leading coefficient included (so the vector has length phi(N) + 1).
std::vector<Rational> cyclotomic_polynomial(int n);

// An element of Q(zeta_N) as a polynomial in zeta_N of degree < phi(N).
struct CycloNumber {
    int order = 2;
    std::vector<Rational> coeffs; // ascending powers of zeta_N

    bool is_rational() const;
    bool is_one() const;
    std::string str() const;

    bool operator==(const CycloNumber&) const = default;
};

CycloNumber cyclo_from_rational(int n, const Rational& value);
CycloNumber zeta(int n, long long k); // zeta_N^k reduced mod Phi_N

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b);
CycloNumber operator-(const CycloNumber& a, const CycloNumber& b);
CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);

// Multiplicative inverse; throws DivisionByZero on zero.
CycloNumber inverse(const CycloNumber& a);

// Sum over fixed points of 1/((1-zeta^r_i)(1-zeta^k_i)). Throws
// DivisionByZero when any exponent is 0 mod N.
CycloNumber lefschetz_sum(int n, const std::vector<std::pair<long long, long long>>& weights);

// A solution {(r,k),(l,m)} up to swaps within and between the two points:
// each pair is stored sorted and the two pairs are stored sorted.
using ExponentPair = std::pair<int, int>;
using TwoPointSolution = std::pair<ExponentPair, ExponentPair>;

// All solution classes of the two-point equation for prime N <= 13.
std::vector<TwoPointSolution> solve_two_point(int n);

} // namespace resgraph
