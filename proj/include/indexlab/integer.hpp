#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace indexlab {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Largest k with p^k | n; std::nullopt stands for infinity (n = 0).
/// Throws InvalidPrime when p is not prime.
std::optional<unsigned> valuation(const Integer& n, const Integer& p);

/// Same as valuation() but without the primality check, for hot paths
/// where p is already known to be prime. n must be nonzero.
unsigned valuation_unchecked(const Integer& n, unsigned long p);

/// Nonnegative gcd of a list; the empty gcd is 0.
Integer gcd_all(std::span<const Integer> xs);

bool is_prime(const Integer& n);
bool is_prime(std::uint64_t n);

/// Primes in [2, bound], ascending.
std::vector<unsigned> primes_up_to(unsigned bound);

Integer factorial(unsigned n);
Integer ipow(const Integer& base, unsigned long exp);

/// Full factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
/// Trial division, then Pollard-Brent on the cofactor. Throws
/// FactorizationFailed if a composite cofactor resists the iteration budget.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// True iff no prime square divides n (n != 0). Odd-only variant ignores 2.
bool is_squarefree(const Integer& n);
bool is_odd_squarefree(const Integer& n);

/// Euclidean remainder in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

std::string to_decimal(const Integer& n);
Integer parse_integer(std::string_view text);

/// Ring adapter for berkowitz().
struct IntegerRing {
    using value_type = Integer;
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from_int(long v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
};

}  // namespace indexlab
