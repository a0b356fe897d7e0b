#pragma once

#include "foldq/rational.hpp"

#include <vector>

namespace foldq {

// Dense integer polynomials, coefficient vector indexed by degree.
// Only what the cyclotomic / 2cos minimal-polynomial derivation needs.
namespace intpoly {

using Poly = std::vector<BigInt>;

inline Poly trim(Poly p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
    return p;
}

inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
    Poly r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return trim(std::move(r));
}

inline Poly add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return trim(std::move(r));
}

inline Poly scale(const Poly& a, const BigInt& c) {
    Poly r = a;
    for (auto& x : r) x *= c;
    return trim(std::move(r));
}

/// Exact division; throws if the division leaves a remainder.
inline Poly divexact(const Poly& num, const Poly& den) {
    Poly rem = num;
    if (deg(den) < 0 || den.back() == 0) throw std::invalid_argument("division by zero polynomial");
    int dq = deg(num) - deg(den);
    if (dq < 0) throw std::invalid_argument("inexact polynomial division");
    Poly q(dq + 1, BigInt(0));
    for (int k = dq; k >= 0; --k) {
        BigInt lead = rem[k + deg(den)];
        if (lead % den.back() != 0) throw std::invalid_argument("inexact polynomial division");
        BigInt c = lead / den.back();
        q[k] = c;
        for (int i = 0; i <= deg(den); ++i) rem[k + i] -= c * den[i];
    }
    for (const auto& c : rem)
        if (c != 0) throw std::invalid_argument("inexact polynomial division");
    return trim(std::move(q));
}

/// m-th cyclotomic polynomial via (x^m - 1) / prod of proper divisors.
inline Poly cyclotomic(int m) {
    if (m < 1) throw std::invalid_argument("cyclotomic: m must be positive");
    Poly xm1(m + 1, BigInt(0));
    xm1[0] = -1;
    xm1[m] = 1;
    Poly q = xm1;
    for (int d = 1; d < m; ++d)
        if (m % d == 0) q = divexact(q, cyclotomic(d));
    return q;
}

/// Minimal polynomial of 2cos(2*pi/m) over Q, monic with integer
/// coefficients, degree phi(m)/2 (m >= 3). Uses the palindrome identity
/// Phi_m(x) = x^d * psi(x + 1/x) with x^j + x^{-j} expanded through the
/// recurrence V_0 = 2, V_1 = y, V_{j+1} = y V_j - V_{j-1}.
inline Poly cos2pi_minpoly(int m) {
    if (m < 3) throw std::invalid_argument("cos2pi_minpoly: m must be >= 3");
    Poly phi = cyclotomic(m);
    int d = deg(phi) / 2;
    std::vector<Poly> V(d + 1);
    V[0] = {BigInt(2)};
    if (d >= 1) V[1] = {BigInt(0), BigInt(1)};
    for (int j = 2; j <= d; ++j) V[j] = add(mul({BigInt(0), BigInt(1)}, V[j - 1]), scale(V[j - 2], -1));
    Poly psi = {phi[d]};
    for (int j = 1; j <= d; ++j) psi = add(psi, scale(V[j], phi[d + j]));
    return trim(std::move(psi));
}

} // namespace intpoly

} // namespace foldq
