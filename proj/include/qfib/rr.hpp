#pragma once

#include <cstdint>
#include <vector>

#include "qfib/fibonacci.hpp"
#include "qfib/intpoly.hpp"
#include "qfib/qcore.hpp"

namespace qfib {

namespace detail {
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
}  // namespace detail

/// Alternating Rogers-Ramanujan sum equal to F_{n+1}(q):
/// sum over all integers k of (-1)^k q^{k(5k-1)/2} [n; floor((n+5k)/2)],
/// restricted to the k whose binomial index lies in [0, n] (all other terms
/// are zero, so the bound subsumes any printed summation limit).
inline IntPoly rr_sum_F(unsigned long n) {
    const auto row = q_binom_row(n);
    IntPoly acc;
    const long long nn = static_cast<long long>(n);
    for (long long k = -(nn / 5 + 1); k <= nn / 5 + 1; ++k) {
        const long long idx = detail::floor_div(nn + 5 * k, 2);
        if (idx < 0 || idx > nn) continue;
        const unsigned long e = static_cast<unsigned long>(k * (5 * k - 1) / 2);
        IntPoly term = row[static_cast<std::size_t>(idx)].shifted(e);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Second Rogers-Ramanujan sum, equal to G_n(q):
/// sum of (-1)^k q^{k(5k-3)/2} [n; floor((n-1+5k)/2)] over in-range indices.
inline IntPoly rr_sum_G(unsigned long n) {
    const auto row = q_binom_row(n);
    IntPoly acc;
    const long long nn = static_cast<long long>(n);
    for (long long k = -(nn / 5 + 2); k <= nn / 5 + 2; ++k) {
        const long long idx = detail::floor_div(nn - 1 + 5 * k, 2);
        if (idx < 0 || idx > nn) continue;
        const unsigned long e = static_cast<unsigned long>(k * (5 * k - 3) / 2);
        IntPoly term = row[static_cast<std::size_t>(idx)].shifted(e);
        acc = (k % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// The two-term congruence for F_{n+1} mod Phi_n, with r = floor((n+2)/5):
/// (-1)^r q^{r(5r+1)/2} [n; floor((n-5r)/2)] + (-1)^r q^{r(5r-1)/2} [n; floor((n+5r)/2)],
/// reduced to canonical form. Contract: equals residue(fib(SchurF, n+1), n).
inline Residue residue_F_two_term(unsigned long n) {
    if (n == 0) throw DomainError("residue_F_two_term requires n >= 1");
    const long long nn = static_cast<long long>(n);
    const long long r = (nn + 2) / 5;
    const auto row = q_binom_row(n);
    auto pick = [&](long long idx) -> IntPoly {
        if (idx < 0 || idx > nn) return IntPoly{};
        return row[static_cast<std::size_t>(idx)];
    };
    IntPoly sum = pick(detail::floor_div(nn - 5 * r, 2))
                      .shifted(static_cast<unsigned long>(r * (5 * r + 1) / 2)) +
                  pick(detail::floor_div(nn + 5 * r, 2))
                      .shifted(static_cast<unsigned long>(r * (5 * r - 1) / 2));
    if (r % 2 != 0) sum = -sum;
    return residue(sum, n);
}

/// One row of Pan's residue table for G_n mod Phi_n, n = 5m + c:
/// c=0 -> 0, c=1 -> q^m, c=2 -> -q^{3m+1}, c=3 -> -q^{2m+1}, c=4 -> q^{4m+3}.
struct PanResidueCase {
    unsigned long n;
    unsigned long m;
    long long r_of_n;
    Residue expected;
};

inline PanResidueCase pan_expected_residue(unsigned long n) {
    if (n < 2) throw DomainError("pan_expected_residue requires n >= 2");
    const unsigned long m = n / 5;
    const unsigned long c = n % 5;
    const long long mm = static_cast<long long>(m);
    long long r = 0;
    IntPoly raw;
    switch (c) {
        case 0: break;
        case 1: r = -mm; raw = IntPoly::monomial(1, m); break;
        case 2: r = -mm; raw = IntPoly::monomial(-1, 3 * m + 1); break;
        case 3: r = mm + 1; raw = IntPoly::monomial(-1, 2 * m + 1); break;
        case 4: r = mm + 1; raw = IntPoly::monomial(1, 4 * m + 3); break;
    }
    return PanResidueCase{n, m, r, residue(raw, n)};
}

/// Exponent kernel of Pan's telescoping step:
/// ell(m,k) = k(5k-3)/2 - C(floor((5(m+k)+1)/2), 2).
/// Adjacent values differ by 5m+1, with the pairing depending on the parity
/// of m.
inline long long ell(long long m, long long k) {
    const long long x = detail::floor_div(5 * (m + k) + 1, 2);
    return k * (5 * k - 3) / 2 - x * (x - 1) / 2;
}

}  // namespace qfib
