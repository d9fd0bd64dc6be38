#pragma once

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "indexlab/int_matrix.hpp"
#include "indexlab/int_poly.hpp"
#include "indexlab/integer.hpp"

namespace indexlab {

/// Multiset of (ramification index e, residue degree f) pairs, kept sorted.
struct SplittingType {
    std::vector<std::pair<unsigned, unsigned>> pairs;

    std::size_t prime_count() const { return pairs.size(); }
    bool ramified() const;
    /// Sum of e*f; equals the field degree.
    unsigned degree() const;
    /// e.g. "(1,1)(2,1)".
    std::string to_string() const;

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Element of the maximal order, coordinates over the integral basis.
struct AlgebraicInt {
    std::vector<Integer> coords;

    friend bool operator==(const AlgebraicInt&, const AlgebraicInt&) = default;
};

/* An order as the rows of a matrix over the power basis 1, t, ..., t^(n-1)
 * with one common denominator: omega_i = (sum_j basis(i,j) t^j) / denom.
 * The matrix is lower triangular with positive diagonal and entries left of
 * each diagonal entry reduced into [0, diagonal), so omega_0 = 1 and omega_i
 * has exact degree i. This is the row HNF of the column-reversed lattice,
 * which makes it canonical: equal orders give equal (basis, denom). */
struct Order {
    IntMatrix basis;
    Integer denom;

    friend bool operator==(const Order&, const Order&) = default;
};

/// Irreducibility over Q of a monic polynomial: degree patterns mod many
/// primes, then Hensel lifting with subset-product trial division.
bool is_irreducible_over_q(const IntPoly& f);

/// Dedekind criterion: true iff Z[t] is p-maximal.
bool dedekind_test(const IntPoly& f, const Integer& p);

struct PMaximalOrder {
    Order order;
    unsigned vp_index = 0;  // v_p of [order : Z[t]]
};

/// Round-2 enlargement of the equation order until it is p-maximal.
PMaximalOrder p_maximal_order(const IntPoly& f, const Integer& p);

class NumberField {
public:
    const IntPoly& defining_poly() const { return f_; }
    int degree() const { return f_.degree(); }
    /// The integral basis.
    const Order& order() const { return order_; }
    const Integer& disc() const { return disc_; }
    const Integer& poly_disc() const { return poly_disc_; }
    /// [O_K : Z[t]]
    const Integer& equation_index() const { return equation_index_; }
    /// Structure constants: coordinate k of omega_i * omega_j sits at (i*n + j)*n + k.
    const std::vector<Integer>& mult_table() const { return table_; }

    AlgebraicInt rational(const Integer& c) const;
    AlgebraicInt one() const { return rational(1); }
    /// The root t of the defining polynomial.
    AlgebraicInt generator() const;

    AlgebraicInt add(const AlgebraicInt& a, const AlgebraicInt& b) const;
    AlgebraicInt multiply(const AlgebraicInt& a, const AlgebraicInt& b) const;

    /// Element (sum_j num[j] t^j) / den, or nullopt if it is not integral.
    std::optional<AlgebraicInt> from_power_basis(const std::vector<Integer>& num, const Integer& den) const;
    /// Numerators over order().denom.
    std::vector<Integer> to_power_basis(const AlgebraicInt& a) const;

    /// Row j holds the coordinates of a * omega_j.
    IntMatrix multiplication_matrix(const AlgebraicInt& a) const;

    /// Cached splitting type; see split_prime().
    SplittingType splitting(const Integer& p) const;

    friend NumberField build_field(const IntPoly& f);

private:
    struct SplitCache {
        std::shared_mutex mutex;
        std::map<Integer, SplittingType> entries;
    };

    IntPoly f_;
    Order order_;
    Integer disc_, poly_disc_, equation_index_;
    std::vector<Integer> table_;
    std::shared_ptr<SplitCache> cache_ = std::make_shared<SplitCache>();
};

/// Throws InvalidDegree (deg < 1), DegreeOutOfScope (deg > 7),
/// InvalidInput (not monic), ReduciblePolynomial.
NumberField build_field(const IntPoly& f);

/// Splitting type of p, through the per-field write-once cache. Uses the
/// factorization of f mod p when the Dedekind criterion holds and the
/// algebra decomposition otherwise.
SplittingType split_prime(const NumberField& k, const Integer& p);

/// Splitting read off f mod p; only valid when dedekind_test(f, p) holds.
SplittingType split_prime_dedekind(const IntPoly& f, const Integer& p);

/* Decomposition of O_K/pO_K into local components. The elements fixed by
 * Frobenius form the span of the primitive idempotents; they are separated
 * by eigenvalues of multiplication operators. For a component eps of
 * dimension d, the image of x -> x^(p^j) (p^j >= n) on eps*A is its residue
 * field, giving f, and e = d/f. Uncached. */
SplittingType split_prime_algebra(const NumberField& k, const Integer& p);

/// Characteristic polynomial of multiplication by t (monic, degree n).
IntPoly char_poly(const NumberField& k, const AlgebraicInt& t);

/// I(t) = sqrt(disc(F_t) / D_K); nullopt (infinity) for non-primitive t.
std::optional<Integer> index_of(const NumberField& k, const AlgebraicInt& t);

bool is_primitive(const NumberField& k, const AlgebraicInt& t);

}  // namespace indexlab
