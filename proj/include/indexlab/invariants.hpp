#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "indexlab/integer.hpp"
#include "indexlab/number_field.hpp"

namespace indexlab {

struct SearchOptions {
    /// Worker threads for the class refinement (>= 1).
    unsigned jobs = 1;
    /// Level cap for vp_IK; unset means INDEXLAB_CAP or the default
    /// 2*v_p(n!) + v_p(D_K) + 2.
    std::optional<unsigned> cap;
};

/* i(t) = gcd over x in Z of F_t(x). A monic F of degree n is an integer
 * combination of the binomials C(x, k), k <= n, whose coefficients are the
 * forward differences of F at 0; those are integer combinations of
 * F(0), ..., F(n) and vice versa, so the gcd of all values equals the gcd of
 * these n+1 values. */
Integer i_theta(const NumberField& k, const AlgebraicInt& t);

/// A residue class of O_K / p^level O_K, coordinates in [0, p^level).
struct RefinementNode {
    unsigned level = 0;
    std::vector<Integer> coords;
};

struct PrimeSearch {
    unsigned valuation = 0;
    /// Every element of this class has v_p(i(t)) = valuation (vp_iK), or
    /// v_p(I(t)) = valuation (vp_IK).
    RefinementNode witness;
    /// Classes evaluated, for diagnostics.
    std::size_t classes = 0;
};

/* max over primitive t of v_p(i(t)).
 *
 * Classes mod p^m are refined level by level. F_t mod p^m depends only on
 * the class of t, so either every element of a class has all values of F_t
 * divisible by p^m or none does; S_m is the set of classes where they all
 * are, and S_{m+1} only contains children of S_m. The answer is the largest
 * m with S_m nonempty. Since i(t + c) = i(t) for rational integers c, the
 * coordinate on omega_0 = 1 is pinned to 0. Every m satisfies
 * m <= v_p(n!) (the leading binomial coefficient of F is n!), which is also
 * where the search stops. Values are evaluated modulo p^(v_p(n!)+1) with
 * the batched kernels. Returns 0 for p > n. */
PrimeSearch vp_iK_search(const NumberField& k, unsigned p, const SearchOptions& opt = {});
unsigned vp_iK(const NumberField& k, unsigned p, const SearchOptions& opt = {});

/* min over primitive t of v_p(I(t)).
 *
 * If v = v_p(I(t)) and t' = t + p^m d with m > v, then p^v O_p lies in
 * Z_p[t], so p^m d lies in p Z_p[t] and the powers of t' agree with those
 * of t modulo p Z_p[t]; by Nakayama Z_p[t'] = Z_p[t]. So a class mod p^m
 * whose primitive representative has v < m is certified with value v, and
 * a class whose representative has v >= m has v >= m throughout. Undecided
 * classes are dropped once m reaches the best certified value. Throws
 * RefinementCapExceeded past the level cap. Returns 0 for p > n. */
PrimeSearch vp_IK_search(const NumberField& k, unsigned p, const SearchOptions& opt = {});
unsigned vp_IK(const NumberField& k, unsigned p, const SearchOptions& opt = {});

/// Primes p <= n with at least p distinct prime ideals above them.
std::set<unsigned> maccluer_support(const NumberField& k);

struct PrimeValuations {
    unsigned v_i = 0;  // v_p(i(K))
    unsigned v_I = 0;  // v_p(I(K))
};

struct InvariantReport {
    Integer field_disc;
    std::map<unsigned, SplittingType> splittings;  // every prime p <= n
    std::map<unsigned, PrimeValuations> valuations;
    std::set<unsigned> maccluer;
    Integer i_K;
    Integer I_K;
    AlgebraicInt witness;
    IntPoly witness_char_poly;
};

InvariantReport full_report(const NumberField& k, const SearchOptions& opt = {});

/// Primitive t with i(t) = i(K), assembled by CRT from the per-prime
/// witness classes.
AlgebraicInt good_element(const NumberField& k, const SearchOptions& opt = {});

/// Level cap used by vp_IK when none is given.
unsigned default_ik_cap(const NumberField& k, unsigned p);

}  // namespace indexlab
