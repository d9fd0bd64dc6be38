#include "indexlab/integer.hpp"

#include <algorithm>
#include <map>

#include "indexlab/errors.hpp"

namespace indexlab {

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::ZeroModP: return "ZeroModP";
    case ErrorKind::ReduciblePolynomial: return "ReduciblePolynomial";
    case ErrorKind::DegreeOutOfScope: return "DegreeOutOfScope";
    case ErrorKind::RefinementCapExceeded: return "RefinementCapExceeded";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    }
    return "Error";
}

bool is_prime(const Integer& n)
{
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<unsigned> valuation(const Integer& n, const Integer& p)
{
    if (!is_prime(p))
        throw Error(ErrorKind::InvalidPrime, p.get_str() + " is not prime");
    if (n == 0) return std::nullopt;
    Integer rest;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

unsigned valuation_unchecked(const Integer& n, unsigned long p)
{
    Integer rest;
    Integer pz = p;
    return static_cast<unsigned>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Integer gcd_all(std::span<const Integer> xs)
{
    Integer g = 0;
    for (const auto& x : xs) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

std::vector<unsigned> primes_up_to(unsigned bound)
{
    std::vector<bool> composite(bound + 1, false);
    std::vector<unsigned> out;
    for (unsigned i = 2; i <= bound; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (unsigned long j = static_cast<unsigned long>(i) * i; j <= bound; j += i)
            composite[j] = true;
    }
    return out;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer ipow(const Integer& base, unsigned long exp)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

Integer mod_floor(const Integer& a, const Integer& m)
{
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

Integer parse_integer(std::string_view text)
{
    std::string s(text);
    Integer r;
    if (s.empty() || r.set_str(s, 10) != 0)
        throw Error(ErrorKind::ParseError, "not an integer: '" + s + "'");
    return r;
}

namespace {

constexpr unsigned kTrialBound = 1u << 16;

// Pollard-Brent; returns a nontrivial factor or 0 on budget exhaustion.
Integer pollard_brent(const Integer& n, unsigned long seed)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    const unsigned long budget = 1ul << 26;
    for (unsigned long c = seed; c < seed + 20; ++c) {
        Integer y = 2, x, ys, q = 1, g = 1;
        unsigned long r = 1, iterations = 0;
        const unsigned long m = 128;
        auto step = [&](Integer& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) step(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    step(y);
                    q *= abs(x - y);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            } while (k < r && g == 1);
            r *= 2;
            iterations += r;
        } while (g == 1 && iterations < budget);
        if (g == n) {
            do {
                step(ys);
                Integer d = abs(x - ys);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != 1 && g != n) return g;
    }
    return 0;
}

void factor_cofactor(const Integer& n, std::map<Integer, unsigned>& out, unsigned mult)
{
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += mult;
        return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2;; ++k) {
            Integer root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                factor_cofactor(root, out, mult * static_cast<unsigned>(k));
                return;
            }
        }
    }
    Integer d = pollard_brent(n, 1);
    if (d == 0)
        throw Error(ErrorKind::FactorizationFailed, "could not split " + n.get_str());
    Integer rest = n / d;
    factor_cofactor(d, out, mult);
    factor_cofactor(rest, out, mult);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n)
{
    if (n == 0) throw Error(ErrorKind::InvalidInput, "cannot factor zero");
    Integer m = abs(n);
    std::map<Integer, unsigned> found;
    static const std::vector<unsigned> small = primes_up_to(kTrialBound);
    for (unsigned p : small) {
        if (m == 1) break;
        if (Integer(p) * p > m) break;
        if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            Integer pz = p;
            found[pz] = static_cast<unsigned>(mpz_remove(m.get_mpz_t(), m.get_mpz_t(), pz.get_mpz_t()));
        }
    }
    factor_cofactor(m, found, 1);
    return {found.begin(), found.end()};
}

bool is_squarefree(const Integer& n)
{
    for (const auto& [p, e] : factor_integer(n))
        if (e > 1) return false;
    return true;
}

bool is_odd_squarefree(const Integer& n)
{
    for (const auto& [p, e] : factor_integer(n))
        if (p != 2 && e > 1) return false;
    return true;
}

}  // namespace indexlab
