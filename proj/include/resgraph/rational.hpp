#pragma once

// Exact scalar types used everywhere. All arithmetic on intersection data
// is over Q; nothing in the library touches floating point.

#include <Eigen/Dense>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <sstream>
#include <string>

namespace resgraph {

using Int      = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline bool is_integer(const Rational& q) {
    return denominator(q) == 1;
}

// Floor and ceiling of an exact rational.
inline Int floor_q(const Rational& q) {
    Int n = numerator(q), d = denominator(q); // d > 0, canonical form
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

inline Int ceil_q(const Rational& q) {
    return -floor_q(-q);
}

// mpq_rational streams as "p/q" in lowest terms, "p" when integral,
// sign carried by the numerator. That is the wire format for reports.
inline std::string to_string(const Rational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

inline std::string to_string(const Int& n) {
    std::ostringstream os;
    os << n;
    return os.str();
}

// lcm of coefficient denominators; 1 for an integral vector.
inline Int denominator_lcm(const RVector& v) {
    Int l = 1;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        l = boost::multiprecision::lcm(l, Int(denominator(v(i))));
    return l;
}

// Componentwise ceiling.
inline RVector ceil_vec(const RVector& v) {
    RVector r(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) r(i) = Rational(ceil_q(v(i)));
    return r;
}

} // namespace resgraph
