#pragma once

#include <string>
#include <utility>
#include <vector>

#include "indexlab/int_poly.hpp"
#include "indexlab/integer.hpp"

namespace indexlab {

/// Polynomial over the prime field F_p, ascending residues in [0, p).
/// Invariant: coefficients reduced, no trailing zeros.
class ModPoly {
public:
    ModPoly() = default;
    ModPoly(Integer p, std::vector<Integer> coeffs);
    static ModPoly reduce(const IntPoly& f, const Integer& p);
    static ModPoly constant(const Integer& p, const Integer& c);
    static ModPoly x(const Integer& p);

    const Integer& modulus() const { return p_; }
    const std::vector<Integer>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Integer& leading() const { return c_.back(); }

    ModPoly monic() const;
    ModPoly derivative() const;
    /// Lift to Z[x] with coefficients in [0, p).
    IntPoly lift() const;

    friend ModPoly operator+(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator-(const ModPoly& a, const ModPoly& b);
    friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
    friend bool operator==(const ModPoly& a, const ModPoly& b) = default;

    std::string to_string() const;

private:
    void normalize();
    Integer p_;
    std::vector<Integer> c_;
};

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
ModPoly operator%(const ModPoly& a, const ModPoly& b);
/// Monic gcd (zero if both are zero).
ModPoly gcd(const ModPoly& a, const ModPoly& b);
/// base^exp mod m.
ModPoly powmod(const ModPoly& base, const Integer& exp, const ModPoly& m);

/// Canonical factor order: by degree, then lexicographically on the
/// ascending coefficient list.
bool canonical_less(const ModPoly& a, const ModPoly& b);

struct FactorizationModP {
    Integer unit;
    std::vector<std::pair<ModPoly, unsigned>> factors;

    /// Sum of degree * exponent.
    unsigned total_degree() const;
};

/// Complete factorization into monic irreducibles, canonical order.
/// Throws ZeroModP when f vanishes mod p, InvalidPrime for composite p.
FactorizationModP factor_mod_p(const IntPoly& f, const Integer& p);
FactorizationModP factor_mod_p(const ModPoly& f);

bool is_squarefree_mod_p(const IntPoly& f, const Integer& p);

/// Number of monic irreducible polynomials of degree f over F_p.
Integer count_monic_irreducibles(const Integer& p, unsigned f);

/// Rabin irreducibility test for a nonconstant polynomial over F_p.
bool is_irreducible(const ModPoly& f);

/// Degrees of the irreducible factors of a squarefree polynomial (ascending),
/// via distinct-degree factorization only.
std::vector<unsigned> factor_degrees_squarefree(const ModPoly& f);

}  // namespace indexlab
