#include <gtest/gtest.h>

#include <map>

#include "indexlab/errors.hpp"
#include "indexlab/fp_linalg.hpp"
#include "indexlab/mod_poly.hpp"

using namespace indexlab;

namespace {

ModPoly mp(long p, std::vector<long> c)
{
    std::vector<Integer> v(c.begin(), c.end());
    return ModPoly(p, v);
}

// Every monic polynomial of the given degree over F_p.
std::vector<ModPoly> all_monic(unsigned p, unsigned d)
{
    std::vector<ModPoly> out;
    std::vector<long> c(d + 1, 0);
    c[d] = 1;
    for (;;) {
        out.push_back(mp(p, c));
        unsigned i = 0;
        while (i < d && c[i] == static_cast<long>(p) - 1) c[i++] = 0;
        if (i == d) return out;
        ++c[i];
    }
}

bool divides(const ModPoly& a, const ModPoly& b) { return (b % a).is_zero(); }

// Irreducible iff no monic factor of degree 1..deg/2.
bool brute_irreducible(const ModPoly& f)
{
    const unsigned p = f.modulus().get_ui();
    for (int d = 1; 2 * d <= f.degree(); ++d)
        for (const auto& g : all_monic(p, d))
            if (divides(g, f)) return false;
    return f.degree() >= 1;
}

ModPoly expand(const FactorizationModP& fac, unsigned p)
{
    ModPoly acc = ModPoly::constant(p, fac.unit);
    for (const auto& [g, e] : fac.factors)
        for (unsigned i = 0; i < e; ++i) acc = acc * g;
    return acc;
}

}  // namespace

TEST(FactorModP, Examples)
{
    const auto a = factor_mod_p(IntPoly{-8, -2, -1, 1}, 2);
    ASSERT_EQ(a.factors.size(), 2u);
    EXPECT_EQ(a.factors[0].first, mp(2, {0, 1}));
    EXPECT_EQ(a.factors[0].second, 2u);
    EXPECT_EQ(a.factors[1].first, mp(2, {1, 1}));
    EXPECT_EQ(a.factors[1].second, 1u);

    const auto b = factor_mod_p(IntPoly{1, 0, 1}, 2);
    ASSERT_EQ(b.factors.size(), 1u);
    EXPECT_EQ(b.factors[0].first, mp(2, {1, 1}));
    EXPECT_EQ(b.factors[0].second, 2u);

    const auto c = factor_mod_p(IntPoly{3, -1, 0, 1}, 3);
    ASSERT_EQ(c.factors.size(), 3u);
    EXPECT_EQ(c.factors[0].first, mp(3, {0, 1}));
    EXPECT_EQ(c.factors[1].first, mp(3, {1, 1}));
    EXPECT_EQ(c.factors[2].first, mp(3, {2, 1}));
}

TEST(FactorModP, Errors)
{
    try {
        factor_mod_p(IntPoly{4, 0, 2}, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ZeroModP);
    }
    try {
        factor_mod_p(IntPoly{1, 1}, 6);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidPrime);
    }
}

TEST(FactorModP, ExhaustiveSmallFields)
{
    for (unsigned p : {2u, 3u, 5u}) {
        for (unsigned d = 1; d <= 4; ++d) {
            for (const auto& f : all_monic(p, d)) {
                for (long unit = 1; unit < static_cast<long>(p); ++unit) {
                    const ModPoly g = ModPoly::constant(p, unit) * f;
                    const auto fac = factor_mod_p(g);
                    EXPECT_EQ(expand(fac, p), g) << g.to_string();
                    EXPECT_EQ(fac.total_degree(), d);
                    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
                        EXPECT_TRUE(fac.factors[i].first.leading() == 1);
                        EXPECT_TRUE(brute_irreducible(fac.factors[i].first)) << fac.factors[i].first.to_string();
                        if (i) EXPECT_TRUE(canonical_less(fac.factors[i - 1].first, fac.factors[i].first));
                    }
                }
            }
        }
    }
}

TEST(FactorModP, LargerPrimesRecombine)
{
    const IntPoly f{-7, 3, 0, 11, -2, 5, 1, 1};
    for (unsigned long p : {7UL, 101UL, 65537UL, 1000003UL}) {
        const auto fac = factor_mod_p(f, p);
        EXPECT_EQ(expand(fac, p), ModPoly::reduce(f, p));
        for (const auto& [g, e] : fac.factors) EXPECT_TRUE(is_irreducible(g));
    }
}

TEST(SquarefreeModP, Examples)
{
    EXPECT_FALSE(is_squarefree_mod_p(IntPoly{-17, 0, 1}, 2));
    EXPECT_TRUE(is_squarefree_mod_p(IntPoly{3, -1, 0, 1}, 3));
    EXPECT_TRUE(is_squarefree_mod_p(IntPoly{1, 1, 1}, 2));
}

TEST(CountIrreducibles, Examples)
{
    EXPECT_EQ(count_monic_irreducibles(2, 1), 2);
    EXPECT_EQ(count_monic_irreducibles(2, 2), 1);
    EXPECT_EQ(count_monic_irreducibles(3, 1), 3);
    EXPECT_EQ(count_monic_irreducibles(2, 7), 18);
    try {
        count_monic_irreducibles(2, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidDegree);
    }
}

TEST(CountIrreducibles, MatchesEnumeration)
{
    for (unsigned p : {2u, 3u, 5u})
        for (unsigned d = 1; d <= 4; ++d) {
            long n = 0;
            for (const auto& f : all_monic(p, d)) n += brute_irreducible(f);
            EXPECT_EQ(count_monic_irreducibles(p, d), n) << p << "^" << d;
            long rabin = 0;
            for (const auto& f : all_monic(p, d)) rabin += is_irreducible(f);
            EXPECT_EQ(rabin, n);
        }
}

TEST(FactorDegrees, SquarefreeInput)
{
    // x (x + 1) (x^2 + x + 1) (x^3 + x + 1) over F_2
    const ModPoly f = mp(2, {0, 1}) * mp(2, {1, 1}) * mp(2, {1, 1, 1}) * mp(2, {1, 1, 0, 1});
    EXPECT_EQ(factor_degrees_squarefree(f), (std::vector<unsigned>{1, 1, 2, 3}));
}

TEST(ModPoly, GcdAndPowmod)
{
    const ModPoly a = mp(5, {1, 1}) * mp(5, {2, 1}), b = mp(5, {1, 1}) * mp(5, {3, 1});
    EXPECT_EQ(gcd(a, b), mp(5, {1, 1}));
    // x^5 = x mod (x^5 - x) over F_5
    const ModPoly m = mp(5, {0, 4, 0, 0, 0, 1});
    EXPECT_EQ(powmod(ModPoly::x(5), 5, m), ModPoly::x(5));
}

TEST(FpLinalg, KernelAndRank)
{
    const FpRows a{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
    EXPECT_EQ(rank_mod(a, 7), 2u);
    const auto ker = left_kernel_mod(a, 3, 7);
    ASSERT_EQ(ker.size(), 1u);
    for (std::size_t j = 0; j < 3; ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < 3; ++i) s += ker[0][i] * a[i][j];
        EXPECT_EQ(s % 7, 0);
    }
    EXPECT_EQ(row_space_mod(a, 7).size(), 2u);
}
