#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "qfib/errors.hpp"
#include "qfib/intpoly.hpp"

namespace qfib {

/// [n]_{q^m} = 1 + q^m + q^{2m} + ... + q^{(n-1)m}.
inline IntPoly q_int(unsigned long n, unsigned long m = 1) {
    if (n == 0 || m == 0) throw DomainError("q_int requires n >= 1 and m >= 1");
    std::vector<BigInt> v((n - 1) * m + 1);
    for (unsigned long i = 0; i < n; ++i) v[i * m] = 1;
    return IntPoly(std::move(v));
}

/// Full row n of the q-Pascal triangle: entries [n;0] .. [n;n], built with the
/// recurrence [n;k] = [n-1;k-1] + q^k [n-1;k] keeping one rolling row.
inline std::vector<IntPoly> q_binom_row(unsigned long n) {
    std::vector<IntPoly> row{IntPoly{1}};
    row.reserve(n + 1);
    for (unsigned long m = 1; m <= n; ++m) {
        std::vector<IntPoly> next(m + 1);
        next[0] = IntPoly{1};
        for (unsigned long k = 1; k < m; ++k) next[k] = add_shifted(row[k - 1], row[k], k);
        next[m] = IntPoly{1};
        row = std::move(next);
    }
    return row;
}

/// Gaussian binomial coefficient [n;k]; zero outside 0 <= k <= n.
inline IntPoly q_binom(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return IntPoly{};
    return q_binom_row(n)[static_cast<std::size_t>(k)];
}

namespace detail {
inline std::vector<unsigned long> divisors(unsigned long n) {
    std::vector<unsigned long> small, large;
    for (unsigned long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}
}  // namespace detail

/// The n-th cyclotomic polynomial, by exact division:
/// Phi_n = (q^n - 1) / prod_{d | n, d < n} Phi_d. Memoized for the process.
inline const IntPoly& cyclotomic(unsigned long n) {
    if (n == 0) throw DomainError("cyclotomic index must be >= 1");
    static std::map<unsigned long, IntPoly> cache;
    static std::mutex mtx;
    {
        std::lock_guard lock(mtx);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    IntPoly num = IntPoly::monomial(1, n) - IntPoly{1};
    IntPoly result = num;
    for (unsigned long d : detail::divisors(n)) {
        if (d == n) continue;
        result = result.divrem(cyclotomic(d)).quotient;
    }
    std::lock_guard lock(mtx);
    return cache.emplace(n, std::move(result)).first->second;
}

/// A class in Z[q]/(Phi_n(q)): the canonical Euclidean remainder mod Phi_n,
/// tagged with n. Equivalently an exact value at a primitive n-th root of
/// unity. Two residues are equal iff moduli match and canonical forms are
/// identical.
struct Residue {
    unsigned long modulus_index;
    IntPoly value;

    bool operator==(const Residue&) const = default;
};

inline Residue residue(const IntPoly& a, unsigned long n) {
    return Residue{n, a.divrem(cyclotomic(n)).remainder};
}

inline Residue residue_mul(const Residue& a, const Residue& b) {
    if (a.modulus_index != b.modulus_index) throw ModulusMismatch{};
    return residue(a.value * b.value, a.modulus_index);
}

inline Residue residue_scale(const Residue& a, const BigInt& c) {
    return Residue{a.modulus_index, c * a.value};
}

/// All d <= max_d with Phi_d dividing a exactly.
inline std::set<unsigned long> cyclo_spectrum(const IntPoly& a, unsigned long max_d) {
    if (a.is_zero()) throw ZeroPolynomial{};
    std::set<unsigned long> out;
    for (unsigned long d = 1; d <= max_d; ++d)
        if (a.divisible_by(cyclotomic(d))) out.insert(d);
    return out;
}

}  // namespace qfib
