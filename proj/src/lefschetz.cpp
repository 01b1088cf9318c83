#include "resgraph/lefschetz.hpp"
#include "resgraph/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace resgraph {

namespace {

// Dense polynomials over Q, ascending degree, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

Poly sub(Poly a, const Poly& b) {
    if (b.size() > a.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Long division; r becomes the remainder, the quotient is returned.
Poly divmod(Poly& r, const Poly& d) {
    if (d.empty()) throw DivisionByZero("polynomial division by zero");
    Poly q;
    if (r.size() < d.size()) return q;
    q.assign(r.size() - d.size() + 1, Rational(0));
    for (size_t k = q.size(); k-- > 0;) {
        const Rational c = r[k + d.size() - 1] / d.back();
        if (c == 0) continue;
        q[k] = c;
        for (size_t j = 0; j < d.size(); ++j) r[k + j] -= c * d[j];
    }
    trim(r);
    return q;
}

const Poly& modulus_for(int n) {
    static std::map<int, Poly> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, cyclotomic_polynomial(n)).first;
    return it->second;
}

CycloNumber make(int n, Poly p) {
    const Poly& m = modulus_for(n);
    divmod(p, m);
    p.resize(m.size() - 1, Rational(0));
    return CycloNumber{n, std::move(p)};
}

void require_same_order(const CycloNumber& a, const CycloNumber& b) {
    if (a.order != b.order) throw DomainError("mixed cyclotomic orders");
}

} // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
    if (n < 1) throw DomainError("cyclotomic order must be positive");
    // Phi_m for each divisor m, by dividing x^m - 1 by the earlier ones.
    std::vector<Poly> cache(static_cast<size_t>(n) + 1);
    for (int m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        Poly p(static_cast<size_t>(m) + 1, Rational(0));
        p[0] = -1;
        p[static_cast<size_t>(m)] = 1;
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            Poly q = divmod(p, cache[static_cast<size_t>(d)]);
            if (!p.empty()) throw std::logic_error("cyclotomic division left a remainder");
            p = std::move(q);
        }
        cache[static_cast<size_t>(m)] = std::move(p);
    }
    return cache.back();
}

bool CycloNumber::is_rational() const {
    return std::all_of(coeffs.begin() + (coeffs.empty() ? 0 : 1), coeffs.end(),
                       [](const Rational& c) { return c == 0; });
}

bool CycloNumber::is_one() const { return !coeffs.empty() && coeffs[0] == 1 && is_rational(); }

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Rational c = coeffs[i];
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        const bool unit_coeff = (c == 1) && i > 0;
        if (!unit_coeff) os << to_string(c);
        if (i > 0) {
            if (!unit_coeff) os << '*';
            os << 'z';
            if (i > 1) os << '^' << i;
        }
    }
    if (first) os << '0';
    return os.str();
}

CycloNumber cyclo_from_rational(int n, const Rational& value) {
    if (n < 2) throw DomainError("cyclotomic order must be at least 2");
    CycloNumber c{n, Poly(modulus_for(n).size() - 1, Rational(0))};
    c.coeffs[0] = value;
    return c;
}

CycloNumber zeta(int n, long long k) {
    if (n < 2) throw DomainError("cyclotomic order must be at least 2");
    long long e = k % n;
    if (e < 0) e += n;
    Poly p(static_cast<size_t>(e) + 1, Rational(0));
    p[static_cast<size_t>(e)] = 1;
    return make(n, std::move(p));
}

CycloNumber operator+(const CycloNumber& a, const CycloNumber& b) {
    require_same_order(a, b);
    CycloNumber r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

CycloNumber operator-(const CycloNumber& a, const CycloNumber& b) {
    require_same_order(a, b);
    CycloNumber r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    require_same_order(a, b);
    return make(a.order, mul(a.coeffs, b.coeffs));
}

CycloNumber inverse(const CycloNumber& a) {
    // Extended Euclid against Phi_N, tracking only the coefficient of a:
    // r_i = s_i * a + t_i * Phi_N throughout. Phi_N is irreducible over Q,
    // so the gcd with a nonzero a is a nonzero constant c and a^{-1} = s/c.
    Poly r0 = modulus_for(a.order);
    Poly r1 = a.coeffs;
    trim(r1);
    if (r1.empty()) throw DivisionByZero("inverse of zero in Q(zeta)");
    Poly s0;
    Poly s1{Rational(1)};
    while (r1.size() > 1) {
        Poly rem = r0;
        Poly q = divmod(rem, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Poly s = sub(std::move(s0), mul(q, s1));
        s0 = std::move(s1);
        s1 = std::move(s);
        if (r1.empty()) throw std::logic_error("nonzero element shares a factor with Phi_N");
    }
    const Rational c = r1[0];
    for (Rational& x : s1) x /= c;
    return make(a.order, std::move(s1));
}

CycloNumber lefschetz_sum(int n, const std::vector<std::pair<long long, long long>>& weights) {
    const CycloNumber one = cyclo_from_rational(n, 1);
    CycloNumber total = cyclo_from_rational(n, 0);
    for (const auto& [r, k] : weights) {
        if (r % n == 0 || k % n == 0)
            throw DivisionByZero("fixed-point weight 0 mod N: the factor 1 - zeta^0 vanishes");
        total = total + inverse(one - zeta(n, r)) * inverse(one - zeta(n, k));
    }
    return total;
}

std::vector<TwoPointSolution> solve_two_point(int n) {
    if (n < 2 || n > 13) throw DomainError("two-point search covers prime orders 2..13");
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) throw DomainError("two-point search needs a prime order");

    const CycloNumber one = cyclo_from_rational(n, 1);
    std::vector<CycloNumber> inv_factor(static_cast<size_t>(n));
    for (int e = 1; e < n; ++e)
        inv_factor[static_cast<size_t>(e)] = inverse(one - zeta(n, e));

    std::set<TwoPointSolution> classes;
    for (int r = 1; r < n; ++r)
        for (int k = 1; k < n; ++k) {
            const CycloNumber first = inv_factor[static_cast<size_t>(r)] *
                                      inv_factor[static_cast<size_t>(k)];
            for (int l = 1; l < n; ++l)
                for (int m = 1; m < n; ++m) {
                    const CycloNumber s = first + inv_factor[static_cast<size_t>(l)] *
                                                      inv_factor[static_cast<size_t>(m)];
                    if (!s.is_one()) continue;
                    const ExponentPair p1{std::min(r, k), std::max(r, k)};
                    const ExponentPair p2{std::min(l, m), std::max(l, m)};
                    classes.insert(p1 <= p2 ? TwoPointSolution{p1, p2}
                                            : TwoPointSolution{p2, p1});
                }
        }
    return {classes.begin(), classes.end()};
}

} // namespace resgraph
