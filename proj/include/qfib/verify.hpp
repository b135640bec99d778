#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qfib/errors.hpp"
#include "qfib/fibonacci.hpp"
#include "qfib/intpoly.hpp"
#include "qfib/qcore.hpp"
#include "qfib/rr.hpp"

namespace qfib {

/// Every verifiable statement of the source material, one checker each.
enum class ClaimId {
    THM_1_1,
    THM_1_2,
    LEMMA_1_1,
    EQ_1_6,
    EQ_1_7,
    COR_1_1,
    COR_1_2,
    THM_2_1,
    CASSINI_1_9,
    EQ_1_10,
    PAN_TABLE,
    EQ_1_3_TABLE,
    RR_F_1_2,
    RR_G_1_5,
    SUM_EQ_REC,
    VAL_5,
    VAL_2,
    F_MOD2,
    F_PERIOD_24,
    CONJ_3_1,
    CONJ_3_2,
};

inline const std::vector<std::pair<ClaimId, std::string>>& claim_names() {
    static const std::vector<std::pair<ClaimId, std::string>> names = {
        {ClaimId::THM_1_1, "THM_1_1"},         {ClaimId::THM_1_2, "THM_1_2"},
        {ClaimId::LEMMA_1_1, "LEMMA_1_1"},     {ClaimId::EQ_1_6, "EQ_1_6"},
        {ClaimId::EQ_1_7, "EQ_1_7"},           {ClaimId::COR_1_1, "COR_1_1"},
        {ClaimId::COR_1_2, "COR_1_2"},         {ClaimId::THM_2_1, "THM_2_1"},
        {ClaimId::CASSINI_1_9, "CASSINI_1_9"}, {ClaimId::EQ_1_10, "EQ_1_10"},
        {ClaimId::PAN_TABLE, "PAN_TABLE"},     {ClaimId::EQ_1_3_TABLE, "EQ_1_3_TABLE"},
        {ClaimId::RR_F_1_2, "RR_F_1_2"},       {ClaimId::RR_G_1_5, "RR_G_1_5"},
        {ClaimId::SUM_EQ_REC, "SUM_EQ_REC"},   {ClaimId::VAL_5, "VAL_5"},
        {ClaimId::VAL_2, "VAL_2"},             {ClaimId::F_MOD2, "F_MOD2"},
        {ClaimId::F_PERIOD_24, "F_PERIOD_24"}, {ClaimId::CONJ_3_1, "CONJ_3_1"},
        {ClaimId::CONJ_3_2, "CONJ_3_2"},
    };
    return names;
}

inline std::string to_string(ClaimId id) {
    for (const auto& [c, s] : claim_names())
        if (c == id) return s;
    return "?";
}

inline ClaimId claim_from_string(const std::string& name) {
    for (const auto& [c, s] : claim_names())
        if (s == name) return c;
    throw UnknownClaim(name);
}

enum class ClaimStatus { ProvedInRange, Counterexample, Supported };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::ProvedInRange: return "Proved-in-range";
        case ClaimStatus::Counterexample: return "Counterexample";
        case ClaimStatus::Supported: return "Supported";
    }
    return "?";
}

/// One failing instance, with enough serialized data to re-run it alone.
struct ClaimFailure {
    std::string parameters;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    ClaimId claim;
    std::string range;
    std::size_t instances_checked = 0;
    std::vector<ClaimFailure> failures;
    ClaimStatus status = ClaimStatus::ProvedInRange;
    std::chrono::milliseconds elapsed{0};
    std::string note;

    bool passed() const { return failures.empty(); }

    std::string to_json() const {
        auto escape = [](const std::string& s) {
            std::string out;
            for (char c : s) {
                if (c == '"' || c == '\\') out += '\\';
                out += c;
            }
            return out;
        };
        std::ostringstream os;
        os << "{\"claim\":\"" << to_string(claim) << "\",\"range\":\"" << escape(range)
           << "\",\"instances_checked\":" << instances_checked << ",\"failures\":[";
        for (std::size_t i = 0; i < failures.size(); ++i) {
            if (i) os << ',';
            os << "{\"parameters\":\"" << escape(failures[i].parameters) << "\",\"expected\":\""
               << escape(failures[i].expected) << "\",\"actual\":\"" << escape(failures[i].actual)
               << "\"}";
        }
        os << "],\"status\":\"" << to_string(status) << "\",\"elapsed_ms\":" << elapsed.count();
        if (!note.empty()) os << ",\"note\":\"" << escape(note) << "\"";
        os << "}";
        return os.str();
    }
};

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace detail {

// Runs check(i) for i in [0, count); failures land in deterministic slots
// regardless of worker scheduling.
template <typename Check>
inline std::vector<std::optional<ClaimFailure>> run_instances(std::size_t count, unsigned jobs,
                                                              Check&& check) {
    std::vector<std::optional<ClaimFailure>> slots(count);
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) slots[i] = check(i);
        return slots;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
            slots[i] = check(i);
    };
    std::vector<std::thread> threads;
    const unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(count));
    threads.reserve(n);
    for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return slots;
}

inline void collect(VerificationReport& report,
                    std::vector<std::optional<ClaimFailure>>&& slots) {
    report.instances_checked += slots.size();
    for (auto& s : slots)
        if (s) report.failures.push_back(std::move(*s));
}

}  // namespace detail

/// Soft per-claim bound ceilings; keep single runs at desk scale unless the
/// caller explicitly overrides.
inline unsigned long claim_soft_limit(ClaimId id) {
    switch (id) {
        case ClaimId::SUM_EQ_REC: return 400;
        case ClaimId::RR_F_1_2:
        case ClaimId::RR_G_1_5: return 200;
        case ClaimId::LEMMA_1_1:
        case ClaimId::EQ_1_3_TABLE:
        case ClaimId::PAN_TABLE:
        case ClaimId::COR_1_1:
        case ClaimId::EQ_1_10: return 250;
        case ClaimId::THM_1_1:
        case ClaimId::THM_1_2: return 200;
        case ClaimId::EQ_1_6:
        case ClaimId::EQ_1_7: return 250;
        case ClaimId::COR_1_2: return 300;
        case ClaimId::THM_2_1: return 400;
        case ClaimId::CASSINI_1_9: return 200;
        case ClaimId::VAL_5: return 100000;
        case ClaimId::VAL_2: return 5000;
        case ClaimId::F_MOD2: return 400;
        case ClaimId::F_PERIOD_24: return 500;
        case ClaimId::CONJ_3_1: return 400;
        case ClaimId::CONJ_3_2: return 250;
    }
    return 0;
}

namespace detail {

inline std::string params1(const char* name, unsigned long v) {
    return std::string(name) + "=" + std::to_string(v);
}

inline void check_bound(ClaimId id, unsigned long bound, bool override_limit) {
    if (!override_limit && bound > claim_soft_limit(id))
        throw BoundTooLarge(to_string(id), bound, claim_soft_limit(id));
}

// --- individual claim checkers ------------------------------------------

inline void check_thm_1_1(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "primes p < " + std::to_string(bound) + " with p = +-2 mod 5";
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p < bound; ++p)
        if (is_prime(p) && (p % 5 == 2 || p % 5 == 3)) ps.push_back(p);
    if (!ps.empty()) fib(FamilyId::schur_f(), ps.back() + 1);  // warm the cache once
    collect(rep, run_instances(ps.size(), jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long p = ps[i];
                const auto rem = fib(FamilyId::schur_f(), p + 1).divrem(q_int(p)).remainder;
                if (rem.is_zero()) return std::nullopt;
                return ClaimFailure{params1("p", p), "[]", rem.serialize()};
            }));
}

inline void check_thm_1_2(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "primes p < " + std::to_string(bound) + " with p = +-1 mod 5";
    std::vector<unsigned long> ps;
    for (unsigned long p = 2; p < bound; ++p)
        if (is_prime(p) && (p % 5 == 1 || p % 5 == 4)) ps.push_back(p);
    if (!ps.empty()) fib(FamilyId::schur_g(), ps.back());
    collect(rep, run_instances(ps.size(), jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long p = ps[i];
                const auto rem = fib(FamilyId::schur_g(), p - 1).divrem(q_int(p)).remainder;
                if (rem.is_zero()) return std::nullopt;
                return ClaimFailure{params1("p", p), "[]", rem.serialize()};
            }));
}

inline void check_lemma_1_1(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "2 <= n <= " + std::to_string(bound) + ", both directions";
    fib(FamilyId::schur_f(), bound + 1);
    for (unsigned long n = 1; n <= bound; ++n) cyclotomic(n);
    collect(rep, run_instances(bound - 1, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 2;
                const bool divisible =
                    fib(FamilyId::schur_f(), n + 1).divisible_by(cyclotomic(n));
                const bool expected = (n % 5 == 2 || n % 5 == 3);
                if (divisible == expected) return std::nullopt;
                return ClaimFailure{params1("n", n),
                                    expected ? "Phi_n | F_{n+1}" : "Phi_n does not divide F_{n+1}",
                                    divisible ? "divisible" : "not divisible"};
            }));
}

inline void check_eq_1_6_or_7(VerificationReport& rep, unsigned long bound, unsigned jobs,
                              bool family_f) {
    rep.range = "5n <= " + std::to_string(bound);
    const FamilyId fam = family_f ? FamilyId::schur_f() : FamilyId::schur_g();
    const unsigned long count = bound / 5;
    fib(fam, 5 * count);
    for (unsigned long n = 1; n <= count; ++n) cyclotomic(5 * n);
    collect(rep, run_instances(count, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n5 = 5 * (i + 1);
                const auto rem = fib(fam, n5).divrem(cyclotomic(n5)).remainder;
                if (rem.is_zero()) return std::nullopt;
                return ClaimFailure{params1("5n", n5), "[]", rem.serialize()};
            }));
}

inline void check_cor_1_1(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "2 <= n <= " + std::to_string(bound);
    fib(FamilyId::schur_f(), bound);
    fib(FamilyId::schur_g(), bound);
    for (unsigned long n = 2; n <= bound; ++n) cyclotomic(n);
    collect(rep, run_instances(bound - 1, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 2;
                const IntPoly prod = fib(FamilyId::schur_f(), n) * fib(FamilyId::schur_g(), n);
                const Residue actual = residue(prod, n);
                const Residue expected =
                    residue(n % 5 == 0 ? IntPoly{} : IntPoly{1}, n);
                if (actual == expected) return std::nullopt;
                return ClaimFailure{params1("n", n), expected.value.serialize(),
                                    actual.value.serialize()};
            }));
}

inline void check_cor_1_2(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "k*n <= " + std::to_string(bound) + ", k >= 2, n >= 1";
    std::vector<std::pair<unsigned long, unsigned long>> pairs;
    for (unsigned long k = 2; k <= bound; ++k)
        for (unsigned long n = 1; k * n <= bound; ++n) pairs.emplace_back(k, n);
    fib(FamilyId::schur_f(), bound);
    fib(FamilyId::schur_g(), bound);
    for (unsigned long k = 2; 2 * k <= bound; ++k) cyclotomic(k);
    collect(rep, run_instances(pairs.size(), jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const auto [k, n] = pairs[i];
                const std::string params =
                    "k=" + std::to_string(k) + ", n=" + std::to_string(n);
                const BigInt fn = int_fib(n);
                const Residue fkn = residue(fib(FamilyId::schur_f(), k * n), k);
                const Residue gkn = residue(fib(FamilyId::schur_g(), k * n), k);
                const Residue f_exp = residue_scale(residue(fib(FamilyId::schur_f(), k), k), fn);
                const Residue g_exp = residue_scale(residue(fib(FamilyId::schur_g(), k), k), fn);
                if (!(fkn == f_exp))
                    return ClaimFailure{params + " (F)", f_exp.value.serialize(),
                                        fkn.value.serialize()};
                if (!(gkn == g_exp))
                    return ClaimFailure{params + " (G)", g_exp.value.serialize(),
                                        gkn.value.serialize()};
                const Residue prod = residue_mul(fkn, gkn);
                const Residue prod_exp =
                    residue(k % 5 == 0 ? IntPoly{} : IntPoly::constant(fn * fn), k);
                if (!(prod == prod_exp))
                    return ClaimFailure{params + " (product)", prod_exp.value.serialize(),
                                        prod.value.serialize()};
                return std::nullopt;
            }));
}

inline void check_thm_2_1(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "5^k * m <= " + std::to_string(bound) + ", k >= 1, m != 0 mod 5";
    struct Inst {
        unsigned long pk, m;
    };
    std::vector<Inst> insts;
    for (unsigned long pk = 5; pk <= bound; pk *= 5)
        for (unsigned long m = 1; pk * m <= bound; ++m)
            if (m % 5 != 0) insts.push_back({pk, m});
    fib(FamilyId::schur_f(), bound);
    fib(FamilyId::schur_g(), bound);
    collect(rep, run_instances(insts.size(), jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const auto [pk, m] = insts[i];
                const std::string params =
                    "5^k=" + std::to_string(pk) + ", m=" + std::to_string(m);
                const IntPoly d = q_int(pk, m);
                for (const auto& fam : {FamilyId::schur_f(), FamilyId::schur_g()}) {
                    const auto rem = fib(fam, pk * m).divrem(d).remainder;
                    if (!rem.is_zero())
                        return ClaimFailure{params + " (" + fam.name() + ")", "[]",
                                            rem.serialize()};
                }
                return std::nullopt;
            }));

    // The worked factorizations: F_5, G_5, F_10, G_10.
    auto expect_eq = [&](const char* what, const IntPoly& actual, const IntPoly& expected) {
        ++rep.instances_checked;
        if (!(actual == expected))
            rep.failures.push_back({what, expected.serialize(), actual.serialize()});
    };
    expect_eq("F_5 = [5]_q", fib(FamilyId::schur_f(), 5), q_int(5));
    expect_eq("G_5 = [5]_q (1 - q + q^2)", fib(FamilyId::schur_g(), 5),
              q_int(5) * IntPoly{1, -1, 1});
    expect_eq("F_10 = [5]_{q^2} (1 + q + q^4 [9]_q)", fib(FamilyId::schur_f(), 10),
              q_int(5, 2) * (IntPoly{1, 1} + q_int(9).shifted(4)));
    expect_eq("G_10 = [5]_{q^2} [11]_q (1 - q + q^3 - q^4 + q^6)",
              fib(FamilyId::schur_g(), 10),
              q_int(5, 2) * q_int(11) * IntPoly{1, -1, 0, 1, -1, 0, 1});
}

inline void check_cassini(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "1 <= n <= " + std::to_string(bound);
    fib(FamilyId::schur_f(), bound + 1);
    fib(FamilyId::schur_g(), bound);
    collect(rep, run_instances(bound, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 1;
                const IntPoly expected =
                    IntPoly::monomial(n % 2 == 0 ? 1 : -1, n * (n - 1) / 2);
                const IntPoly actual = cassini(n);
                if (actual == expected) return std::nullopt;
                return ClaimFailure{params1("n", n), expected.serialize(), actual.serialize()};
            }));
}

inline void check_eq_1_10(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "2 <= n <= " + std::to_string(bound);
    for (unsigned long n = 2; n <= bound; ++n) cyclotomic(n);
    collect(rep, run_instances(bound - 1, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 2;
                const IntPoly sign_mono = IntPoly::monomial(n % 2 == 0 ? 1 : -1, n * (n - 1) / 2);
                const Residue actual = residue(sign_mono, n);
                const Residue expected = residue(IntPoly{-1}, n);
                if (actual == expected) return std::nullopt;
                return ClaimFailure{params1("n", n), expected.value.serialize(),
                                    actual.value.serialize()};
            }));
}

inline void check_pan_table(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "2 <= n <= " + std::to_string(bound);
    fib(FamilyId::schur_g(), bound);
    for (unsigned long n = 2; n <= bound; ++n) cyclotomic(n);
    collect(rep, run_instances(bound - 1, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 2;
                const Residue expected = pan_expected_residue(n).expected;
                const Residue actual = residue(fib(FamilyId::schur_g(), n), n);
                if (actual == expected) return std::nullopt;
                return ClaimFailure{params1("n", n), expected.value.serialize(),
                                    actual.value.serialize()};
            }));
}

inline void check_eq_1_3_table(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    rep.range = "3 <= n <= " + std::to_string(bound) +
                " (two-term congruence, plus vanishing iff n = +-2 mod 5)";
    fib(FamilyId::schur_f(), bound + 1);
    for (unsigned long n = 3; n <= bound; ++n) cyclotomic(n);
    collect(rep, run_instances(bound - 2, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 3;
                const Residue two_term = residue_F_two_term(n);
                const Residue oracle = residue(fib(FamilyId::schur_f(), n + 1), n);
                if (!(two_term == oracle))
                    return ClaimFailure{params1("n", n), oracle.value.serialize(),
                                        two_term.value.serialize()};
                const bool vanishes = two_term.value.is_zero();
                const bool expected = (n % 5 == 2 || n % 5 == 3);
                if (vanishes != expected)
                    return ClaimFailure{params1("n", n) + " (vanishing)",
                                        expected ? "zero" : "nonzero",
                                        vanishes ? "zero" : "nonzero"};
                return std::nullopt;
            }));
}

inline void check_rr(VerificationReport& rep, unsigned long bound, unsigned jobs, bool first) {
    rep.range = "0 <= n <= " + std::to_string(bound);
    const FamilyId fam = first ? FamilyId::schur_f() : FamilyId::schur_g();
    fib(fam, bound + 1);
    collect(rep, run_instances(bound + 1, jobs, [&](std::size_t n) -> std::optional<ClaimFailure> {
                const IntPoly sum = first ? rr_sum_F(n) : rr_sum_G(n);
                const IntPoly expected = fib(fam, first ? n + 1 : n);
                if (sum == expected) return std::nullopt;
                return ClaimFailure{params1("n", n), expected.serialize(), sum.serialize()};
            }));
}

inline void check_sum_eq_rec(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    (void)jobs;  // single harvesting pass; parallelism buys nothing here
    rep.range = "n <= " + std::to_string(bound) + "; families F, G, f_r for r <= 3";
    std::vector<FamilyId> fams{FamilyId::schur_f(), FamilyId::schur_g(),
                               FamilyId::cigler(0), FamilyId::cigler(1), FamilyId::cigler(2),
                               FamilyId::cigler(3)};
    const auto sums = fib_sum_ranges(fams, bound);
    for (std::size_t f = 0; f < fams.size(); ++f) {
        const auto rec = fib_range(fams[f], bound);
        for (unsigned long n = 0; n <= bound; ++n) {
            ++rep.instances_checked;
            if (!(sums[f][n] == rec[n]))
                rep.failures.push_back({fams[f].name() + ", n=" + std::to_string(n),
                                        rec[n].serialize(), sums[f][n].serialize()});
        }
    }
}

inline void check_val_5(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    (void)jobs;
    rep.range = "1 <= n <= " + std::to_string(bound);
    BigInt a{0}, b{1};
    for (unsigned long n = 1; n <= bound; ++n) {
        a += b;
        swap(a, b);  // a is now F_n
        ++rep.instances_checked;
        if (vp(a, 5) != vp(BigInt(n), 5))
            rep.failures.push_back({params1("n", n), "v5(F_n) = " + std::to_string(vp(BigInt(n), 5)),
                                    "v5(F_n) = " + std::to_string(vp(a, 5))});
    }
}

inline void check_val_2(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    (void)jobs;
    rep.range = "v2(F_3n)=1 for odd n <= " + std::to_string(bound) + "; v2(F_6n)=v2(n)+3 for n <= " +
                std::to_string(bound) + "; F mod 8 period 12";
    for (unsigned long n = 1; n <= bound; n += 2) {
        ++rep.instances_checked;
        if (vp(int_fib(3 * n), 2) != 1)
            rep.failures.push_back({params1("n", n), "v2(F_3n) = 1",
                                    "v2(F_3n) = " + std::to_string(vp(int_fib(3 * n), 2))});
    }
    for (unsigned long n = 1; n <= bound; ++n) {
        ++rep.instances_checked;
        const unsigned long expect = vp(BigInt(n), 2) + 3;
        if (vp(int_fib(6 * n), 2) != expect)
            rep.failures.push_back({params1("n", n),
                                    "v2(F_6n) = " + std::to_string(expect),
                                    "v2(F_6n) = " + std::to_string(vp(int_fib(6 * n), 2))});
    }
    // F_n mod 8 repeats with period 12: (0,1,1,2,3,5,0,5,5,2,7,1); in
    // particular F_{6n} = 0 mod 8.
    static constexpr unsigned pattern[12] = {0, 1, 1, 2, 3, 5, 0, 5, 5, 2, 7, 1};
    unsigned a8 = 0, b8 = 1;
    const unsigned long pattern_span = std::min<unsigned long>(12 * bound, 6000);
    for (unsigned long n = 0; n <= pattern_span; ++n) {
        ++rep.instances_checked;
        if (a8 != pattern[n % 12])
            rep.failures.push_back({params1("n", n),
                                    "F_n mod 8 = " + std::to_string(pattern[n % 12]),
                                    "F_n mod 8 = " + std::to_string(a8)});
        const unsigned t = (a8 + b8) % 8;
        a8 = b8;
        b8 = t;
    }
}

inline void check_f_mod2(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    (void)jobs;
    rep.range = "f(N, q) mod 2 for N <= " + std::to_string(bound);
    const auto seq = fib_range(FamilyId::cigler(0), bound);
    for (unsigned long N = 0; N <= bound; ++N) {
        ++rep.instances_checked;
        const unsigned long n = N / 3;
        IntPoly expected;
        switch (N % 3) {
            case 0: expected = IntPoly{}; break;
            case 1: expected = IntPoly::monomial(1, n * (3 * n - 1) / 2); break;
            case 2: expected = IntPoly::monomial(1, n * (3 * n + 1) / 2); break;
        }
        const IntPoly actual = seq[N].reduce_coeffs_mod(2);
        if (!(actual == expected))
            rep.failures.push_back({params1("N", N), expected.serialize(), actual.serialize()});
    }
}

inline void check_f_period_24(VerificationReport& rep, unsigned long bound, unsigned jobs) {
    (void)jobs;
    rep.range = "f(n+24) = f(n) mod [4]_q for n <= " + std::to_string(bound) +
                "; f(6n) divisible by 2(1+q)(1+q^2) for 6n <= " + std::to_string(bound);
    const IntPoly four = q_int(4);
    const auto seq = fib_range(FamilyId::cigler(0), bound + 24);
    for (unsigned long n = 0; n <= bound; ++n) {
        ++rep.instances_checked;
        const IntPoly a = seq[n + 24].divrem(four).remainder;
        const IntPoly b = seq[n].divrem(four).remainder;
        if (!(a == b))
            rep.failures.push_back({params1("n", n), b.serialize(), a.serialize()});
    }
    for (unsigned long n = 1; 6 * n <= bound; ++n) {
        ++rep.instances_checked;
        const auto [quo, rem] = seq[6 * n].divrem(four);
        if (!rem.is_zero() || !quo.all_coeffs_even())
            rep.failures.push_back({params1("6n", 6 * n), "f(6n) = 2 [4]_q * (integer quotient)",
                                    rem.is_zero() ? "quotient by [4]_q has odd coefficient"
                                                  : "not divisible by [4]_q"});
    }
}

inline void decompose_pow2(unsigned long n, unsigned long& k, unsigned long& odd) {
    k = 0;
    odd = n;
    while (odd % 2 == 0) {
        odd /= 2;
        ++k;
    }
}

inline void check_conj_3_1(VerificationReport& rep, unsigned long max_6n, unsigned jobs) {
    rep.range = "6n <= " + std::to_string(max_6n) + ", n = 2^k (2m+1)";
    rep.status = ClaimStatus::Supported;
    const unsigned long count = max_6n / 6;
    fib(FamilyId::cigler(0), 6 * count);
    collect(rep, run_instances(count, jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const unsigned long n = i + 1;
                unsigned long k, odd;
                decompose_pow2(n, k, odd);
                const IntPoly d = q_int(1ul << (k + 2), odd);
                const auto [quo, rem] = fib(FamilyId::cigler(0), 6 * n).divrem(d);
                if (rem.is_zero() && quo.all_coeffs_even()) return std::nullopt;
                return ClaimFailure{params1("n", n) + " (divisor 2[2^" + std::to_string(k + 2) +
                                        "]_{q^" + std::to_string(odd) + "})",
                                    "exact division with even quotient",
                                    rem.is_zero() ? "odd quotient coefficient: " + quo.serialize()
                                                  : "remainder " + rem.serialize()};
            }));
}

inline void check_conj_3_2(VerificationReport& rep, unsigned long max_6n, unsigned long max_r,
                           unsigned jobs) {
    rep.range = "6n <= " + std::to_string(max_6n) + ", 0 <= r <= " + std::to_string(max_r);
    rep.status = ClaimStatus::Supported;
    rep.note = "statement read as f_r(6n, q) throughout (the source drops the subscript once)";
    struct Inst {
        unsigned long r, n;
    };
    std::vector<Inst> insts;
    for (unsigned long r = 0; r <= max_r; ++r)
        for (unsigned long n = 1; 6 * n <= max_6n; ++n) insts.push_back({r, n});
    for (unsigned long r = 0; r <= max_r; ++r) fib(FamilyId::cigler(r), max_6n);
    collect(rep, run_instances(insts.size(), jobs, [&](std::size_t i) -> std::optional<ClaimFailure> {
                const auto [r, n] = insts[i];
                unsigned long k, odd;
                decompose_pow2(n, k, odd);
                const IntPoly d = q_int(1ul << (k + 2), odd);
                const auto rem = fib(FamilyId::cigler(r), 6 * n).divrem(d).remainder;
                if (rem.is_zero()) return std::nullopt;
                return ClaimFailure{"r=" + std::to_string(r) + ", n=" + std::to_string(n), "[]",
                                    rem.serialize()};
            }));
}

}  // namespace detail

inline bool is_conjecture(ClaimId id) {
    return id == ClaimId::CONJ_3_1 || id == ClaimId::CONJ_3_2;
}

/// Sweeps one claim up to `bound` and reports. `bound` is the claim's natural
/// range parameter (n, 5n, k*n, 6n ... as documented per claim).
inline VerificationReport verify_claim(ClaimId claim, unsigned long bound, unsigned jobs = 1,
                                       bool override_limit = false, unsigned long max_r = 3) {
    detail::check_bound(claim, bound, override_limit);
    VerificationReport rep;
    rep.claim = claim;
    const auto t0 = std::chrono::steady_clock::now();
    switch (claim) {
        case ClaimId::THM_1_1: detail::check_thm_1_1(rep, bound, jobs); break;
        case ClaimId::THM_1_2: detail::check_thm_1_2(rep, bound, jobs); break;
        case ClaimId::LEMMA_1_1: detail::check_lemma_1_1(rep, bound, jobs); break;
        case ClaimId::EQ_1_6: detail::check_eq_1_6_or_7(rep, bound, jobs, false); break;
        case ClaimId::EQ_1_7: detail::check_eq_1_6_or_7(rep, bound, jobs, true); break;
        case ClaimId::COR_1_1: detail::check_cor_1_1(rep, bound, jobs); break;
        case ClaimId::COR_1_2: detail::check_cor_1_2(rep, bound, jobs); break;
        case ClaimId::THM_2_1: detail::check_thm_2_1(rep, bound, jobs); break;
        case ClaimId::CASSINI_1_9: detail::check_cassini(rep, bound, jobs); break;
        case ClaimId::EQ_1_10: detail::check_eq_1_10(rep, bound, jobs); break;
        case ClaimId::PAN_TABLE: detail::check_pan_table(rep, bound, jobs); break;
        case ClaimId::EQ_1_3_TABLE: detail::check_eq_1_3_table(rep, bound, jobs); break;
        case ClaimId::RR_F_1_2: detail::check_rr(rep, bound, jobs, true); break;
        case ClaimId::RR_G_1_5: detail::check_rr(rep, bound, jobs, false); break;
        case ClaimId::SUM_EQ_REC: detail::check_sum_eq_rec(rep, bound, jobs); break;
        case ClaimId::VAL_5: detail::check_val_5(rep, bound, jobs); break;
        case ClaimId::VAL_2: detail::check_val_2(rep, bound, jobs); break;
        case ClaimId::F_MOD2: detail::check_f_mod2(rep, bound, jobs); break;
        case ClaimId::F_PERIOD_24: detail::check_f_period_24(rep, bound, jobs); break;
        case ClaimId::CONJ_3_1: detail::check_conj_3_1(rep, bound, jobs); break;
        case ClaimId::CONJ_3_2: detail::check_conj_3_2(rep, bound, max_r, jobs); break;
    }
    if (!rep.failures.empty())
        rep.status = ClaimStatus::Counterexample;
    else if (!is_conjecture(claim))
        rep.status = ClaimStatus::ProvedInRange;
    rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

/// Conjecture scans; bound is max_6n.
inline VerificationReport scan_conjecture(ClaimId claim, unsigned long max_6n,
                                          unsigned long max_r = 3, unsigned jobs = 1,
                                          bool override_limit = false) {
    if (!is_conjecture(claim)) throw UnknownClaim(to_string(claim) + " is not a conjecture");
    return verify_claim(claim, max_6n, jobs, override_limit, max_r);
}

/// Per-claim bounds for `verify all`. The full profile matches the documented
/// acceptance ranges; quick exercises every claim at reduced ranges.
inline std::vector<std::pair<ClaimId, unsigned long>> bound_profile(const std::string& name) {
    if (name == "quick")
        return {
            {ClaimId::SUM_EQ_REC, 80},  {ClaimId::RR_F_1_2, 50},    {ClaimId::RR_G_1_5, 50},
            {ClaimId::LEMMA_1_1, 60},   {ClaimId::THM_1_1, 60},     {ClaimId::THM_1_2, 60},
            {ClaimId::EQ_1_6, 60},      {ClaimId::EQ_1_7, 60},      {ClaimId::PAN_TABLE, 60},
            {ClaimId::EQ_1_3_TABLE, 60}, {ClaimId::COR_1_1, 60},    {ClaimId::COR_1_2, 80},
            {ClaimId::THM_2_1, 125},    {ClaimId::CASSINI_1_9, 60}, {ClaimId::EQ_1_10, 60},
            {ClaimId::VAL_5, 500},      {ClaimId::VAL_2, 120},      {ClaimId::F_MOD2, 80},
            {ClaimId::F_PERIOD_24, 96}, {ClaimId::CONJ_3_1, 96},    {ClaimId::CONJ_3_2, 48},
        };
    if (name == "full")
        return {
            {ClaimId::SUM_EQ_REC, 300},  {ClaimId::RR_F_1_2, 120},    {ClaimId::RR_G_1_5, 120},
            {ClaimId::LEMMA_1_1, 150},   {ClaimId::THM_1_1, 100},     {ClaimId::THM_1_2, 100},
            {ClaimId::EQ_1_6, 150},      {ClaimId::EQ_1_7, 150},      {ClaimId::PAN_TABLE, 150},
            {ClaimId::EQ_1_3_TABLE, 100}, {ClaimId::COR_1_1, 150},    {ClaimId::COR_1_2, 200},
            {ClaimId::THM_2_1, 250},     {ClaimId::CASSINI_1_9, 100}, {ClaimId::EQ_1_10, 150},
            {ClaimId::VAL_5, 2000},      {ClaimId::VAL_2, 500},       {ClaimId::F_MOD2, 150},
            {ClaimId::F_PERIOD_24, 300}, {ClaimId::CONJ_3_1, 240},    {ClaimId::CONJ_3_2, 120},
        };
    throw DomainError("unknown bound profile: " + name);
}

inline std::vector<VerificationReport> verify_all(const std::string& profile, unsigned jobs = 1) {
    std::vector<VerificationReport> reports;
    for (const auto& [claim, bound] : bound_profile(profile))
        reports.push_back(verify_claim(claim, bound, jobs));
    std::sort(reports.begin(), reports.end(), [](const auto& a, const auto& b) {
        return static_cast<int>(a.claim) < static_cast<int>(b.claim);
    });
    return reports;
}

}  // namespace qfib
