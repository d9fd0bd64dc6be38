#include <gtest/gtest.h>

#include <random>

#include "indexlab/errors.hpp"
#include "indexlab/int_matrix.hpp"
#include "indexlab/int_poly.hpp"
#include "indexlab/integer.hpp"
#include "indexlab/mod_poly.hpp"
#include "oracles.hpp"

using namespace indexlab;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no exception";
    return ErrorKind::InvalidInput;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

}  // namespace

TEST(Discriminant, KnownValues)
{
    EXPECT_EQ(poly_discriminant(IntPoly{2, -1, 0, 1}), -104);
    EXPECT_EQ(poly_discriminant(IntPoly{-5, 0, 1}), 20);
    EXPECT_EQ(poly_discriminant(IntPoly{-8, -2, -1, 1}), -2012);
    EXPECT_EQ(poly_discriminant(IntPoly{3, -1, 0, 1}), -239);
    EXPECT_EQ(poly_discriminant(IntPoly{1, 0, 0, 0, 1}), 256);
    EXPECT_EQ(poly_discriminant(IntPoly{-2, 0, 0, 0, 0, 1}), 50000);
    EXPECT_EQ(poly_discriminant(IntPoly{1, 1, 1, 1, 1, 1, 1}), -16807);
}

TEST(Discriminant, CubicFormula)
{
    for (long a = -12; a <= 12; ++a)
        for (long b = -12; b <= 12; ++b)
            EXPECT_EQ(poly_discriminant(IntPoly{b, -a, 0, 1}), 4 * a * a * a - 27 * b * b) << a << "," << b;
}

TEST(Discriminant, NonMonicLeadingCoefficient)
{
    // 2x^2 + 3x + 1: b^2 - 4ac = 1
    EXPECT_EQ(poly_discriminant(IntPoly{1, 3, 2}), 1);
}

TEST(Discriminant, ConstantRejected)
{
    EXPECT_EQ(kind_of([] { poly_discriminant(IntPoly{5}); }), ErrorKind::InvalidDegree);
}

TEST(Discriminant, ZeroIffRepeatedFactor)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> deg(1, 6);
    std::uniform_int_distribution<long> c(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Integer> co;
        const int n = deg(rng);
        for (int i = 0; i < n; ++i) co.push_back(c(rng));
        co.push_back(std::max(1L, std::abs(c(rng))));
        IntPoly f(co);
        if (trial % 3 == 0) {
            // Force a square factor.
            IntPoly g{c(rng), 1};
            f = g * g * IntPoly{c(rng), 1};
        }
        // gcd(f, f') is nonconstant iff f and f' share a root; test that over F_p for
        // many large primes (a common factor over Q survives every reduction).
        bool shared = true;
        for (unsigned long p : {1000003UL, 1000033UL, 1000037UL}) {
            if (f.leading() % p == 0) continue;
            shared = shared && gcd(ModPoly::reduce(f, p), ModPoly::reduce(f.derivative(), p)).degree() > 0;
        }
        EXPECT_EQ(poly_discriminant(f) == 0, shared) << f.to_string();
    }
}

TEST(Resultant, Examples)
{
    EXPECT_EQ(poly_resultant(IntPoly{0, 1}, IntPoly{-7, 1}), -7);
    EXPECT_EQ(poly_resultant(IntPoly{1, 0, 1}, IntPoly{-1, 1}), 2);
    const IntPoly f{3, -1, 0, 1};
    EXPECT_EQ(poly_resultant(f, f), 0);
    EXPECT_EQ(kind_of([] { poly_resultant(IntPoly{}, IntPoly{1, 1}); }), ErrorKind::InvalidInput);
}

TEST(Resultant, MatchesProductOfValuesAtRoots)
{
    // f = (x - 2)(x + 3)(x - 5): res(f, g) = g(2) g(-3) g(5).
    const IntPoly f = IntPoly{-2, 1} * IntPoly{3, 1} * IntPoly{-5, 1};
    const IntPoly g{7, -4, 0, 2, 1};
    EXPECT_EQ(poly_resultant(f, g), g(2) * g(-3) * g(5));
}

TEST(Resultant, MultiplicativeInSecondArgument)
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> deg(1, 4);
    std::uniform_int_distribution<long> c(-9, 9);
    auto poly = [&] {
        std::vector<Integer> co;
        const int n = deg(rng);
        for (int i = 0; i < n; ++i) co.push_back(c(rng));
        long lc = c(rng);
        co.push_back(lc == 0 ? 1 : lc);
        return IntPoly(co);
    };
    for (int trial = 0; trial < 200; ++trial) {
        const IntPoly f = poly(), g = poly(), h = poly();
        EXPECT_EQ(poly_resultant(f, g * h), poly_resultant(f, g) * poly_resultant(f, h));
    }
}

TEST(Valuation, Examples)
{
    EXPECT_EQ(valuation(720, 2), 4u);
    EXPECT_FALSE(valuation(0, 3).has_value());
    EXPECT_EQ(valuation(-2012, 2), 2u);
    EXPECT_EQ(kind_of([] { valuation(12, 4); }), ErrorKind::InvalidPrime);
}

TEST(Valuation, Additive)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> d(-100000, 100000);
    for (int trial = 0; trial < 500; ++trial) {
        Integer a = d(rng), b = d(rng);
        if (a == 0 || b == 0) continue;
        for (unsigned p : {2u, 3u, 5u, 7u})
            EXPECT_EQ(*valuation(a * b, p), *valuation(a, p) + *valuation(b, p));
    }
}

TEST(GcdAll, Examples)
{
    const std::vector<Integer> a{-8, -10, -8, 4}, b{}, c{0, 0, 9};
    EXPECT_EQ(gcd_all(a), 2);
    EXPECT_EQ(gcd_all(b), 0);
    EXPECT_EQ(gcd_all(c), 9);
}

TEST(Factorization, RecombinesAndIsPrime)
{
    for (long n : {2L, 12L, 720L, -2012L, 1000000007L * 3L, 999983L * 1000003L}) {
        Integer back = 1;
        for (const auto& [p, e] : factor_integer(n)) {
            EXPECT_TRUE(is_prime(p));
            back *= ipow(p, e);
        }
        EXPECT_EQ(back, abs(Integer(n)));
    }
    EXPECT_TRUE(is_squarefree(-30));
    EXPECT_FALSE(is_squarefree(12));
    EXPECT_TRUE(is_odd_squarefree(4 * 15));
    EXPECT_FALSE(is_odd_squarefree(9 * 2));
}

TEST(Hnf, Examples)
{
    const auto id = hnf(IntMatrix::identity(2));
    EXPECT_EQ(id.h, IntMatrix::identity(2));
    EXPECT_EQ(id.u, IntMatrix::identity(2));
    EXPECT_EQ(hnf(IntMatrix{{2, 4}, {0, 2}}).h, (IntMatrix{{2, 0}, {0, 2}}));
    EXPECT_EQ(hnf(IntMatrix{{0, 1}, {1, 0}}).h, IntMatrix::identity(2));
    EXPECT_EQ(kind_of([] { hnf(IntMatrix{{1, 2}, {2, 4}}); }), ErrorKind::RankDeficient);
}

TEST(Hnf, RandomProperties)
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = 1 + trial % 5, c = r + trial % 3;
        const IntMatrix m = random_matrix(rng, r, c, 30);
        HnfResult res;
        try {
            res = hnf(m);
        } catch (const Error& e) {
            ASSERT_EQ(e.kind(), ErrorKind::RankDeficient);
            continue;
        }
        EXPECT_EQ(res.u * m, res.h);
        EXPECT_EQ(abs(res.u.determinant()), 1);
        std::size_t col = 0;
        for (std::size_t i = 0; i < r; ++i, ++col) {
            while (res.h(i, col) == 0) {
                for (std::size_t k = i; k < r; ++k) EXPECT_EQ(res.h(k, col), 0);
                ++col;
            }
            EXPECT_GT(res.h(i, col), 0);
            for (std::size_t k = 0; k < i; ++k) {
                EXPECT_GE(res.h(k, col), 0);
                EXPECT_LT(res.h(k, col), res.h(i, col));
            }
            for (std::size_t k = i + 1; k < r; ++k) EXPECT_EQ(res.h(k, col), 0);
        }
        EXPECT_EQ(hnf(res.h).h, res.h);
    }
}

TEST(Hnf, LatticeOfGeneratorsMatchesDeterminant)
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix m = random_matrix(rng, 3, 3, 20);
        const Integer det = abs(m.determinant());
        if (det == 0) continue;
        std::vector<std::vector<Integer>> gens;
        for (std::size_t i = 0; i < 3; ++i) gens.push_back(m.row(i));
        // Adding a combination of existing rows does not change the lattice.
        std::vector<Integer> extra(3);
        for (std::size_t j = 0; j < 3; ++j) extra[j] = 2 * m(0, j) - 5 * m(2, j);
        gens.push_back(extra);
        const IntMatrix h = lattice_hnf(gens, 3);
        ASSERT_EQ(h.rows(), 3u);
        EXPECT_EQ(abs(h.determinant()), det);
    }
}

TEST(Determinant, MatchesCofactorExpansion)
{
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix m = random_matrix(rng, 3, 3, 50);
        const Integer cof = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                            m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
        EXPECT_EQ(m.determinant(), cof);
    }
}

TEST(Parse, SymbolicAndList)
{
    EXPECT_EQ(parse_poly("x^3 - 13*x + 4"), (IntPoly{4, -13, 0, 1}));
    EXPECT_EQ(parse_poly("[4,-13,0,1]"), (IntPoly{4, -13, 0, 1}));
    EXPECT_EQ(parse_poly("x^2 - x - 4"), (IntPoly{-4, -1, 1}));
    EXPECT_EQ(parse_poly("-x + x^2 + 3x"), (IntPoly{0, 2, 1}));
    EXPECT_EQ(kind_of([] { parse_poly("x^^2"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { parse_poly("[1,2"); }), ErrorKind::ParseError);
}

TEST(Parse, RoundTripsThroughText)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const IntPoly f = oracle::random_monic(rng, 1 + trial % 7, 1000);
        EXPECT_EQ(parse_poly(f.to_string()), f) << f.to_string();
    }
}

TEST(IntPoly, NormalizesTrailingZeros)
{
    const IntPoly f(std::vector<Integer>{1, 2, 0, 0});
    EXPECT_EQ(f.degree(), 1);
    EXPECT_TRUE(IntPoly(std::vector<Integer>{0, 0}).is_zero());
    EXPECT_EQ((IntPoly{1, 1} - IntPoly{1, 1}).degree(), -1);
}
