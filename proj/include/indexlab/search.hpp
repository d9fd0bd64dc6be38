#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "indexlab/int_poly.hpp"
#include "indexlab/invariants.hpp"
#include "indexlab/number_field.hpp"

namespace indexlab {

struct Theorem1Witness {
    IntPoly poly;
    InvariantReport report;
    /// "targeted" or "random".
    std::string method;
    unsigned attempts = 0;
};

/* A degree-n field with p | i(K), for p <= n <= 7.
 *
 * Targeted construction: choose degrees d_1 + ... + d_r = n with r >= p
 * for which F_p has enough monic irreducibles, multiply the first ones in
 * canonical order, lift to Z and add p*h for seeded random h until the
 * result is irreducible over Q. Such f is squarefree mod p, so p is
 * unramified with r primes above it and p | i(K) by the Mac Cluer
 * criterion; each candidate is still confirmed by full_report. If the
 * targeted phase exhausts half the budget, random monic polynomials from a
 * small coefficient box are tried. Returns nullopt once `budget` candidates
 * have been examined. */
std::optional<Theorem1Witness> search_theorem1(unsigned n, unsigned p, std::uint64_t seed = 1, unsigned budget = 2000);

struct FieldComparison {
    SplittingType split1, split2;
    PrimeValuations val1, val2;
    bool same_splitting = false;
    /// Same splitting type but different v_p(I(K)): the splitting type alone
    /// does not determine the index valuation.
    bool splitting_insufficient = false;
};

/// Throws InvalidInput on a degree mismatch.
FieldComparison compare_fields(const NumberField& k1, const NumberField& k2, unsigned p, const SearchOptions& opt = {});

}  // namespace indexlab
