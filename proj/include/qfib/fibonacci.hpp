#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qfib/errors.hpp"
#include "qfib/intpoly.hpp"
#include "qfib/qcore.hpp"

namespace qfib {

/// Selector for the three q-Fibonacci families:
///   SchurF  — F_n(q), recurrence F_n = F_{n-1} + q^{n-2} F_{n-2}
///   SchurG  — G_n(q), recurrence G_n = G_{n-1} + q^{n-1} G_{n-2}
///   CiglerF — f_r(n,q), four-term recurrence with parameter r >= 0
class FamilyId {
  public:
    enum class Kind { SchurF, SchurG, CiglerF };

    static FamilyId schur_f() { return FamilyId(Kind::SchurF, 0); }
    static FamilyId schur_g() { return FamilyId(Kind::SchurG, 0); }
    static FamilyId cigler(long r) {
        if (r < 0)
            throw DomainError(
                "CiglerF requires r >= 0: negative r would need Laurent exponents");
        return FamilyId(Kind::CiglerF, static_cast<unsigned long>(r));
    }

    Kind kind() const { return kind_; }
    unsigned long r() const { return r_; }

    /// Summand exponent of q at index k in the defining sum.
    unsigned long sum_exponent(unsigned long k) const {
        switch (kind_) {
            case Kind::SchurF: return k * k;
            case Kind::SchurG: return k * k + k;
            case Kind::CiglerF: return k * (k - 1) / 2 + 2 * r_ * k;
        }
        return 0;  // unreachable
    }

    std::string name() const {
        switch (kind_) {
            case Kind::SchurF: return "F";
            case Kind::SchurG: return "G";
            case Kind::CiglerF: return "f_" + std::to_string(r_);
        }
        return {};
    }

    auto operator<=>(const FamilyId&) const = default;

  private:
    FamilyId(Kind kind, unsigned long r) : kind_(kind), r_(r) {}

    Kind kind_;
    unsigned long r_;
};

namespace detail {

inline std::map<FamilyId, std::vector<IntPoly>>& fib_cache() {
    static std::map<FamilyId, std::vector<IntPoly>> cache;
    return cache;
}

inline std::mutex& fib_cache_mutex() {
    static std::mutex mtx;
    return mtx;
}

inline void extend_family(const FamilyId& family, std::vector<IntPoly>& seq, std::size_t n) {
    if (seq.empty()) {
        switch (family.kind()) {
            case FamilyId::Kind::SchurF:
            case FamilyId::Kind::SchurG:
                seq = {IntPoly{}, IntPoly{1}};
                break;
            case FamilyId::Kind::CiglerF: {
                const unsigned long r = family.r();
                seq = {IntPoly{}, IntPoly{1}, IntPoly{1},
                       IntPoly{1} + IntPoly::monomial(1, 2 * r),
                       IntPoly{1} + IntPoly::monomial(1, 2 * r) +
                           IntPoly::monomial(1, 1 + 2 * r)};
                break;
            }
        }
    }
    while (seq.size() <= n) {
        const std::size_t i = seq.size();
        switch (family.kind()) {
            case FamilyId::Kind::SchurF:
                seq.push_back(add_shifted(seq[i - 1], seq[i - 2], i - 2));
                break;
            case FamilyId::Kind::SchurG:
                seq.push_back(add_shifted(seq[i - 1], seq[i - 2], i - 1));
                break;
            case FamilyId::Kind::CiglerF: {
                const unsigned long r = family.r();
                seq.push_back(add_shifted(add_shifted(seq[i - 1], seq[i - 3], i - 3 + 2 * r),
                                          seq[i - 4], i - 4 + 4 * r));
                break;
            }
        }
    }
}

}  // namespace detail

/// The n-th member of a family, by the defining recurrence, iteratively.
/// Results are cached per family for the life of the process.
inline IntPoly fib(const FamilyId& family, unsigned long n) {
    std::lock_guard lock(detail::fib_cache_mutex());
    auto& seq = detail::fib_cache()[family];
    detail::extend_family(family, seq, n);
    return seq[n];
}

/// Prefix fib(family, 0..n) in one shot; what verification sweeps consume.
inline std::vector<IntPoly> fib_range(const FamilyId& family, unsigned long n) {
    std::lock_guard lock(detail::fib_cache_mutex());
    auto& seq = detail::fib_cache()[family];
    detail::extend_family(family, seq, n);
    return {seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(n) + 1};
}

/// Drops all cached family prefixes (for long scans over many parameters).
inline void clear_fib_cache() {
    std::lock_guard lock(detail::fib_cache_mutex());
    detail::fib_cache().clear();
}

/// fib_sum(family, n) for every n <= max_n and every requested family, from a
/// single rolling pass over the q-Pascal triangle. Entry [m;k] of row m feeds
/// the sum for n = m + k + 1, so one pass harvests every anti-diagonal at
/// once; rows are truncated to k <= max_n - 1 - m, which is all later rows
/// ever read. Independent of the recurrence path in fib().
inline std::vector<std::vector<IntPoly>> fib_sum_ranges(const std::vector<FamilyId>& families,
                                                        unsigned long max_n) {
    std::vector<std::vector<IntPoly>> out(families.size(),
                                          std::vector<IntPoly>(max_n + 1));
    if (max_n == 0) return out;

    // Accumulation buffers sized up front: the summand at index k has degree
    // sum_exponent(k) + k(n-1-2k).
    std::vector<std::vector<std::vector<BigInt>>> buf(families.size());
    for (std::size_t f = 0; f < families.size(); ++f) {
        buf[f].resize(max_n + 1);
        for (unsigned long n = 1; n <= max_n; ++n) {
            unsigned long max_deg = 0;
            for (unsigned long k = 0; k <= (n - 1) / 2; ++k)
                max_deg = std::max(max_deg,
                                   families[f].sum_exponent(k) + k * (n - 1 - 2 * k));
            buf[f][n].resize(max_deg + 1);
        }
    }

    std::vector<IntPoly> row;  // rolling q-Pascal row
    for (unsigned long m = 0; m < max_n; ++m) {
        const unsigned long kmax = std::min(m, max_n - 1 - m);
        std::vector<IntPoly> next(kmax + 1);
        next[0] = IntPoly{1};
        for (unsigned long k = 1; k <= kmax; ++k) {
            if (k == m)
                next[k] = IntPoly{1};
            else
                next[k] = add_shifted(row[k - 1], row[k], k);
        }
        for (unsigned long k = 0; k <= kmax; ++k) {
            const unsigned long n = m + k + 1;
            const auto coeffs = next[k].coeffs();
            for (std::size_t f = 0; f < families.size(); ++f) {
                const unsigned long e = families[f].sum_exponent(k);
                auto& acc = buf[f][n];
                for (std::size_t i = 0; i < coeffs.size(); ++i)
                    mpz_add(acc[e + i].get_mpz_t(), acc[e + i].get_mpz_t(),
                            coeffs[i].get_mpz_t());
            }
        }
        row = std::move(next);
    }
    for (std::size_t f = 0; f < families.size(); ++f)
        for (unsigned long n = 1; n <= max_n; ++n) out[f][n] = IntPoly(std::move(buf[f][n]));
    return out;
}

/// Direct evaluation of the defining sum over 0 <= k <= (n-1)/2; the
/// independent oracle for fib().
inline IntPoly fib_sum(const FamilyId& family, unsigned long n) {
    if (n == 0) return IntPoly{};
    return fib_sum_ranges({family}, n)[0][n];
}

/// Product A(q^{n-1}) A(q^{n-2}) ... A(q) A(1) with A(x) = [[1,x],[1,0]];
/// entries are (F_{n+1}, G_n; F_n, G_{n-1}).
struct FibMatrix {
    IntPoly a11, a12, a21, a22;

    bool operator==(const FibMatrix&) const = default;
};

inline FibMatrix matrix_product(unsigned long n) {
    if (n == 0) throw DomainError("matrix_product requires n >= 1");
    // A(q^e) for the leftmost factor, then multiply rightward.
    auto factor = [](unsigned long e) {
        return FibMatrix{IntPoly{1}, IntPoly::monomial(1, e), IntPoly{1}, IntPoly{}};
    };
    FibMatrix p = factor(n - 1);
    for (unsigned long e = n - 1; e-- > 0;) {
        FibMatrix a = factor(e);
        p = FibMatrix{p.a11 * a.a11 + p.a12 * a.a21, p.a11 * a.a12 + p.a12 * a.a22,
                      p.a21 * a.a11 + p.a22 * a.a21, p.a21 * a.a12 + p.a22 * a.a22};
    }
    return p;
}

/// Left side of the q-Cassini formula: F_{n+1} G_{n-1} - F_n G_n.
inline IntPoly cassini(unsigned long n) {
    if (n == 0) throw DomainError("cassini requires n >= 1");
    const auto F = FamilyId::schur_f();
    const auto G = FamilyId::schur_g();
    return fib(F, n + 1) * fib(G, n - 1) - fib(F, n) * fib(G, n);
}

inline BigInt int_fib(unsigned long n) {
    BigInt a{0}, b{1};
    for (unsigned long i = 0; i < n; ++i) {
        a += b;
        swap(a, b);
    }
    return a;
}

/// p-adic valuation: largest e with p^e | x, for x >= 1.
inline unsigned long vp(const BigInt& x, unsigned long p) {
    if (x == 0) throw DomainError("vp is undefined at 0");
    if (p < 2) throw DomainError("vp requires p >= 2");
    BigInt v = abs(x);
    unsigned long e = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
        mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
        ++e;
    }
    return e;
}

}  // namespace qfib
