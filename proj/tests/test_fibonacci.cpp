#include <doctest.h>

#include <vector>

#include "qfib/fibonacci.hpp"
#include "qfib/qcore.hpp"

using namespace qfib;

TEST_CASE("SchurF first terms") {
    const std::vector<IntPoly> expected = {
        IntPoly{},          IntPoly{1},          IntPoly{1},
        IntPoly{1, 1},      IntPoly{1, 1, 1},    IntPoly{1, 1, 1, 1, 1},
        IntPoly{1, 1, 1, 1, 2, 1, 1},
    };
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(fib(FamilyId::schur_f(), n) == expected[n]);
}

TEST_CASE("SchurG first terms") {
    const std::vector<IntPoly> expected = {
        IntPoly{},       IntPoly{1},          IntPoly{1},
        IntPoly{1, 0, 1}, IntPoly{1, 0, 1, 1}, IntPoly{1, 0, 1, 1, 1, 0, 1},
        IntPoly{1, 0, 1, 1, 1, 1, 1, 1, 1},
    };
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(fib(FamilyId::schur_g(), n) == expected[n]);
}

TEST_CASE("CiglerF r=0 first terms") {
    const std::vector<IntPoly> expected = {
        IntPoly{},           IntPoly{1},          IntPoly{1},
        IntPoly{2},          IntPoly{2, 1},       IntPoly{2, 2, 1},
        IntPoly{2, 2, 2, 2}, IntPoly{2, 2, 2, 4, 2, 1},
    };
    for (std::size_t n = 0; n < expected.size(); ++n)
        CHECK(fib(FamilyId::cigler(0), n) == expected[n]);
    CHECK(fib(FamilyId::cigler(0), 6) == IntPoly{1, 1} * IntPoly{1, 0, 1} * IntPoly{2});
}

TEST_CASE("CiglerF initial values carry the r shift") {
    CHECK(fib(FamilyId::cigler(2), 3) == IntPoly{1} + IntPoly::monomial(1, 4));
    CHECK(fib(FamilyId::cigler(2), 4) ==
          IntPoly{1} + IntPoly::monomial(1, 4) + IntPoly::monomial(1, 5));
    CHECK_THROWS_AS(FamilyId::cigler(-1), DomainError);
}

TEST_CASE("direct sum evaluation matches the listed values") {
    CHECK(fib_sum(FamilyId::schur_f(), 6) == IntPoly{1, 1, 1, 1, 2, 1, 1});
    CHECK(fib_sum(FamilyId::schur_g(), 0) == IntPoly{});
    CHECK(fib_sum(FamilyId::cigler(0), 5) == IntPoly{2, 2, 1});
}

TEST_CASE("recurrence equals defining sum for all three families") {
    const std::vector<FamilyId> fams = {FamilyId::schur_f(), FamilyId::schur_g(),
                                        FamilyId::cigler(0), FamilyId::cigler(1),
                                        FamilyId::cigler(2), FamilyId::cigler(3)};
    const unsigned long N = 60;
    const auto sums = fib_sum_ranges(fams, N);
    for (std::size_t f = 0; f < fams.size(); ++f)
        for (unsigned long n = 0; n <= N; ++n) CHECK(sums[f][n] == fib(fams[f], n));
}

TEST_CASE("per-call fib_sum agrees with the batched pass") {
    for (unsigned long n : {0ul, 1ul, 7ul, 20ul, 33ul})
        CHECK(fib_sum(FamilyId::schur_g(), n) == fib(FamilyId::schur_g(), n));
}

TEST_CASE("q=1 specialization gives integer Fibonacci numbers") {
    for (unsigned long n = 0; n <= 100; ++n) {
        const BigInt fn = int_fib(n);
        CHECK(fib(FamilyId::schur_f(), n).evaluate_int(1) == fn);
        CHECK(fib(FamilyId::schur_g(), n).evaluate_int(1) == fn);
        CHECK(fib(FamilyId::cigler(0), n).evaluate_int(1) == fn);
    }
}

TEST_CASE("matrix product entries") {
    const FibMatrix m1 = matrix_product(1);
    CHECK(m1 == FibMatrix{IntPoly{1}, IntPoly{1}, IntPoly{1}, IntPoly{}});

    const FibMatrix m2 = matrix_product(2);
    CHECK(m2.a11 == IntPoly{1, 1});
    CHECK(m2.a12 == IntPoly{1});
    CHECK(m2.a21 == IntPoly{1});
    CHECK(m2.a22 == IntPoly{1});

    const FibMatrix m5 = matrix_product(5);
    CHECK(m5.a11 == fib(FamilyId::schur_f(), 6));
    CHECK(m5.a12 == fib(FamilyId::schur_g(), 5));
    CHECK(m5.a21 == fib(FamilyId::schur_f(), 5));
    CHECK(m5.a22 == fib(FamilyId::schur_g(), 4));

    for (unsigned long n = 1; n <= 40; ++n) {
        const FibMatrix m = matrix_product(n);
        CHECK(m.a11 == fib(FamilyId::schur_f(), n + 1));
        CHECK(m.a12 == fib(FamilyId::schur_g(), n));
        CHECK(m.a21 == fib(FamilyId::schur_f(), n));
        CHECK(m.a22 == fib(FamilyId::schur_g(), n - 1));
    }
    CHECK_THROWS_AS(matrix_product(0), DomainError);
}

TEST_CASE("Cassini determinant collapses to a signed monomial") {
    CHECK(cassini(1) == IntPoly{-1});
    CHECK(cassini(3) == IntPoly::monomial(-1, 3));
    CHECK(cassini(4) == IntPoly::monomial(1, 6));
    for (unsigned long n = 1; n <= 40; ++n)
        CHECK(cassini(n) == IntPoly::monomial(n % 2 == 0 ? 1 : -1, n * (n - 1) / 2));
    for (unsigned long n = 2; n <= 60; ++n)
        CHECK(residue(cassini(n), n).value == IntPoly{-1});
}

TEST_CASE("integer Fibonacci numbers") {
    CHECK(int_fib(0) == 0);
    CHECK(int_fib(1) == 1);
    CHECK(int_fib(6) == 8);
    CHECK(int_fib(25) == 75025);
    CHECK(int_fib(100) == BigInt("354224848179261915075"));
}

TEST_CASE("p-adic valuation") {
    CHECK(vp(75025, 5) == 2);
    CHECK(vp(8, 2) == 3);
    CHECK(vp(7, 5) == 0);
    CHECK(vp(BigInt(-250), 5) == 3);
    CHECK_THROWS_AS(vp(0, 5), DomainError);
    CHECK_THROWS_AS(vp(10, 1), DomainError);

    for (unsigned long n = 1; n <= 300; ++n) CHECK(vp(int_fib(n), 5) == vp(BigInt(n), 5));
    for (unsigned long n = 1; n <= 60; n += 2) CHECK(vp(int_fib(3 * n), 2) == 1);
    for (unsigned long n = 1; n <= 60; ++n) CHECK(vp(int_fib(6 * n), 2) == vp(BigInt(n), 2) + 3);
}

TEST_CASE("Fibonacci numbers mod 8 have period 12") {
    for (unsigned long n = 0; n <= 240; ++n)
        CHECK(int_fib(n) % 8 == int_fib(n % 12) % 8);
    for (unsigned long n = 0; n <= 40; ++n)
        CHECK(int_fib(6 * n) % 8 == 0);
}

TEST_CASE("fib cache can be cleared") {
    fib(FamilyId::schur_f(), 30);
    clear_fib_cache();
    CHECK(fib(FamilyId::schur_f(), 4) == IntPoly{1, 1, 1});
}
