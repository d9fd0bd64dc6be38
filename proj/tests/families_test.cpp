#include <gtest/gtest.h>

#include "indexlab/errors.hpp"
#include "indexlab/families.hpp"

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

std::vector<Integer> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(CubicReduce, Examples)
{
    EXPECT_EQ(cubic_reduce(36, 216), (std::pair<Integer, Integer>{1, 1}));
    EXPECT_EQ(cubic_reduce(13, 4), (std::pair<Integer, Integer>{13, 4}));
    EXPECT_EQ(cubic_reduce(50, 250), (std::pair<Integer, Integer>{2, 2}));
    EXPECT_EQ(kind_of([] { cubic_reduce(1, 0); }), ErrorKind::NotAField);
}

TEST(CubicReduce, SameFieldAndReduced)
{
    for (long a = -40; a <= 40; a += 4)
        for (long b = -60; b <= 60; b += 8) {
            for (long s : {2L, 3L}) {
                const Integer A = a * s * s, B = b * s * s * s;
                if (!is_irreducible_over_q(cubic_polynomial(A, B))) continue;
                const auto [ra, rb] = cubic_reduce(A, B);
                EXPECT_TRUE(CubicForm::make(ra, rb).reduced());
                EXPECT_EQ(build_field(cubic_polynomial(ra, rb)).disc(), build_field(cubic_polynomial(A, B)).disc());
            }
        }
}

TEST(CubicPredict, Examples)
{
    const auto a = cubic_predict(13, 4);
    EXPECT_EQ(*a.I_pred, 2);
    EXPECT_EQ(a.i_pred, ints({2}));
    const auto b = cubic_predict(1, 3);
    EXPECT_EQ(*b.I_pred, 1);
    EXPECT_EQ(b.i_pred, ints({3}));
    const auto c = cubic_predict(1, 1);
    EXPECT_EQ(*c.I_pred, 1);
    EXPECT_EQ(c.i_pred, ints({1}));
    EXPECT_EQ(kind_of([] { cubic_predict(36, 216); }), ErrorKind::NotReduced);
}

TEST(CubicPredict, CommonDivisorImpliesTwoDividesI)
{
    for (long a = -30; a <= 30; ++a)
        for (long b = -30; b <= 30; ++b) {
            FamilyPrediction p;
            try {
                p = cubic_predict(a, b);
            } catch (const Error&) {
                continue;
            }
            if (*p.I_pred == 2) EXPECT_EQ(p.i_pred[0] % 2, 0) << a << "," << b;
        }
}

TEST(Predictors, Examples)
{
    EXPECT_EQ(pure_cubic_predict(7).i_pred, ints({2}));
    EXPECT_EQ(pure_cubic_predict(2).i_pred, ints({1}));
    EXPECT_EQ(pure_cubic_predict(10).i_pred, ints({1}));
    EXPECT_FALSE(pure_cubic_predict(10).I_pred.has_value());
    EXPECT_EQ(kind_of([] { pure_cubic_predict(8); }), ErrorKind::NotAField);
    EXPECT_EQ(kind_of([] { pure_cubic_predict(-1); }), ErrorKind::NotAField);
    EXPECT_EQ(kind_of([] { pure_cubic_predict(16); }), ErrorKind::NotApplicable);

    EXPECT_EQ(simplest_cubic_predict(39).i_pred, ints({3}));
    EXPECT_EQ(simplest_cubic_predict(0).i_pred, ints({1}));
    EXPECT_EQ(simplest_cubic_predict(363).i_pred, ints({3}));

    EXPECT_EQ(*simplest_quartic_predict(1).I_pred, 2);
    EXPECT_EQ(simplest_quartic_predict(1).i_pred, ints({4}));
    EXPECT_EQ(*simplest_quartic_predict(2).I_pred, 1);
    EXPECT_EQ(simplest_quartic_predict(2).i_pred, ints({1}));
    EXPECT_EQ(*simplest_quartic_predict(16).I_pred, 1);
    EXPECT_EQ(simplest_quartic_predict(16).i_pred, ints({4}));
    EXPECT_EQ(simplest_quartic_predict(-16).i_pred, ints({4}));
    EXPECT_EQ(kind_of([] { simplest_quartic_predict(3); }), ErrorKind::NotApplicable);
    EXPECT_EQ(kind_of([] { simplest_quartic_predict(0); }), ErrorKind::NotApplicable);

    EXPECT_EQ(lehmer_quintic_predict(2).i_pred, ints({5}));
    EXPECT_EQ(lehmer_quintic_predict(0).i_pred, ints({1}));
    EXPECT_EQ(lehmer_quintic_predict(7).i_pred, ints({5}));

    EXPECT_EQ(simplest_sextic_predict(1).i_pred, ints({1}));
    EXPECT_EQ(simplest_sextic_predict(5).i_pred, ints({8, 16}));
    EXPECT_EQ(simplest_sextic_predict(120).i_pred, ints({72, 144}));
    for (long m : {-8L, -5L, -3L, 0L})
        EXPECT_EQ(kind_of([m] { simplest_sextic_predict(m); }), ErrorKind::NotApplicable);

    EXPECT_EQ(quadratic_predict(17).i_pred, ints({2}));
    EXPECT_EQ(quadratic_predict(5).i_pred, ints({1}));
    EXPECT_EQ(quadratic_predict(-7).i_pred, ints({2}));
    EXPECT_EQ(kind_of([] { quadratic_predict(12); }), ErrorKind::NotApplicable);
}

TEST(Predictors, ExponentsWithinFactorialBound)
{
    for (long m = -300; m <= 300; ++m) {
        for (Family f : all_families()) {
            if (f == Family::Cubic) continue;
            FamilyPrediction p;
            try {
                p = predict(f, m);
            } catch (const Error&) {
                continue;
            }
            const int n = family_polynomial(f, m).degree();
            for (const Integer& i : p.i_pred) {
                Integer rest = i;
                for (unsigned q : {2u, 3u, 5u}) {
                    const unsigned v = valuation_unchecked(rest, q);
                    EXPECT_LE(v, valuation_unchecked(factorial(n), q));
                    rest /= ipow(q, v);
                }
                EXPECT_EQ(rest, 1);
            }
        }
    }
}

TEST(FamilyPolynomial, Examples)
{
    EXPECT_EQ(family_polynomial("simplest_cubic", 39), (IntPoly{-1, -42, -39, 1}));
    EXPECT_EQ(family_polynomial("lehmer_quintic", 0), (IntPoly{1, 10, 5, -10, 0, 1}));
    EXPECT_EQ(family_polynomial("simplest_quartic", 2), (IntPoly{1, 2, -6, -2, 1}));
    EXPECT_EQ(family_polynomial("simplest_sextic", 1), (IntPoly{1, 8, 5, -20, -20, -2, 1}));
    EXPECT_EQ(family_polynomial("pure_cubic", 7), (IntPoly{-7, 0, 0, 1}));
    EXPECT_EQ(family_polynomial("quadratic", -7), (IntPoly{7, 0, 1}));
    EXPECT_EQ(kind_of([] { family_polynomial("septic", 1); }), ErrorKind::UnknownFamily);
    EXPECT_EQ(kind_of([] { family_from_name("nope"); }), ErrorKind::UnknownFamily);
}

TEST(Verify, SmallRanges)
{
    const auto a = verify_family(Family::SimplestCubic, 0, 10);
    EXPECT_EQ(a.rows.size(), 11u);
    EXPECT_EQ(a.passed(), 11u);
    EXPECT_TRUE(a.ok());

    const auto b = verify_family(Family::Quadratic, -50, 50);
    EXPECT_TRUE(b.ok());
    for (const auto& row : b.rows)
        if (row.applicable) EXPECT_TRUE(is_squarefree(Integer(row.param)));

    const auto c = verify_family(Family::SimplestQuartic, ints({16, 1, 2}));
    EXPECT_EQ(c.passed(), 3u);
    EXPECT_EQ(c.rows[0].param, "1");
    EXPECT_TRUE(c.ok());
}

TEST(Verify, ReducibleSexticIsNotApplicable)
{
    // s_5 factors over Q, so there is no field to compare against.
    EXPECT_FALSE(is_irreducible_over_q(family_polynomial(Family::SimplestSextic, 5)));
    const auto r = verify_family(Family::SimplestSextic, ints({5}));
    ASSERT_EQ(r.rows.size(), 1u);
    EXPECT_FALSE(r.rows[0].applicable);
    EXPECT_TRUE(r.ok());
}

TEST(Verify, SupportStaysInsideFamilyPrimes)
{
    const std::vector<std::pair<Family, std::set<unsigned>>> allowed{
        {Family::SimplestCubic, {3}}, {Family::SimplestQuartic, {2}}, {Family::LehmerQuintic, {5}}, {Family::SimplestSextic, {2, 3}}};
    for (const auto& [fam, primes] : allowed) {
        const auto r = verify_family(fam, -12, 12);
        for (const auto& row : r.rows) {
            if (!row.applicable) continue;
            for (unsigned p : row.maccluer) EXPECT_TRUE(primes.count(p)) << row.family << " m=" << row.param << " p=" << p;
        }
    }
}

TEST(Verify, CyclicPrimeDegreeAwayFromDegree)
{
    for (Family fam : {Family::SimplestCubic, Family::LehmerQuintic}) {
        const unsigned l = fam == Family::SimplestCubic ? 3 : 5;
        const auto r = verify_family(fam, -15, 40);
        for (const auto& row : r.rows) {
            if (!row.applicable) continue;
            for (const auto& [p, v] : row.valuations)
                if (p != l) EXPECT_EQ(v.v_I > 0, v.v_i > 0) << row.family << " m=" << row.param << " p=" << p;
        }
    }
}

TEST(Verify, CubicBoxRowsAreOrdered)
{
    const auto r = verify_family(Family::Cubic, -2, 2);
    ASSERT_EQ(r.rows.size(), 25u);
    EXPECT_EQ(r.rows.front().param, "-2,-2");
    EXPECT_EQ(r.rows.back().param, "2,2");
    EXPECT_TRUE(r.ok());
}
