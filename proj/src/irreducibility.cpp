#include <bitset>

#include "indexlab/errors.hpp"
#include "indexlab/mod_poly.hpp"
#include "indexlab/number_field.hpp"

namespace indexlab {

namespace {

constexpr unsigned kScreenPrimes = 40;

// s*a + t*b = 1 over F_p for coprime a, b.
std::pair<ModPoly, ModPoly> bezout(const ModPoly& a, const ModPoly& b)
{
    const Integer& p = a.modulus();
    ModPoly r0 = a, r1 = b;
    ModPoly s0 = ModPoly::constant(p, 1), s1 = ModPoly::constant(p, 0);
    ModPoly t0 = ModPoly::constant(p, 0), t1 = ModPoly::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.degree() != 0) throw Error(ErrorKind::InvalidInput, "Hensel factors are not coprime");
    Integer c;
    mpz_invert(c.get_mpz_t(), r0.coeffs()[0].get_mpz_t(), p.get_mpz_t());
    const ModPoly k = ModPoly::constant(p, c);
    return {s0 * k, t0 * k};
}

IntPoly reduce_mod(const IntPoly& f, const Integer& m)
{
    std::vector<Integer> c = f.coeffs();
    for (auto& x : c) x = mod_floor(x, m);
    return IntPoly(std::move(c));
}

// Lifts f = g*h mod p (monic, coprime) to a factorization mod p^k.
std::pair<IntPoly, IntPoly> hensel_pair(const IntPoly& f, const ModPoly& g, const ModPoly& h, const Integer& p, unsigned k)
{
    const auto [s, t] = bezout(g, h);
    IntPoly G = g.lift(), H = h.lift();
    Integer pk = p;
    for (unsigned step = 1; step < k; ++step) {
        const ModPoly e = ModPoly::reduce((f - G * H).divided_exactly(pk), p);
        const ModPoly dg = (t * e) % g, dh = (s * e) % h;
        G = G + pk * dg.lift();
        H = H + pk * dh.lift();
        pk *= p;
        G = reduce_mod(G, pk);
        H = reduce_mod(H, pk);
    }
    return {G, H};
}

std::vector<IntPoly> hensel_all(const IntPoly& f, const std::vector<ModPoly>& factors, std::size_t first, const Integer& p, unsigned k)
{
    if (first + 1 == factors.size()) return {reduce_mod(f, ipow(p, k))};
    ModPoly rest = ModPoly::constant(p, 1);
    for (std::size_t i = first + 1; i < factors.size(); ++i) rest = rest * factors[i];
    auto [g, h] = hensel_pair(f, factors[first], rest, p, k);
    std::vector<IntPoly> out{g};
    for (auto& x : hensel_all(h, factors, first + 1, p, k)) out.push_back(std::move(x));
    return out;
}

IntPoly symmetric(const IntPoly& f, const Integer& m)
{
    std::vector<Integer> c = f.coeffs();
    const Integer half = m / 2;
    for (auto& x : c) {
        x = mod_floor(x, m);
        if (x > half) x -= m;
    }
    return IntPoly(std::move(c));
}

}  // namespace

bool is_irreducible_over_q(const IntPoly& f)
{
    if (!f.is_monic()) throw Error(ErrorKind::InvalidInput, "irreducibility test needs a monic polynomial");
    const int n = f.degree();
    if (n < 1) throw Error(ErrorKind::InvalidDegree, "constant polynomial");
    if (n == 1) return true;
    if (f.coeff(0) == 0) return false;
    const Integer d = poly_discriminant(f);
    if (d == 0) return false;

    // Bit k set: a factor of degree k (1 <= k <= n/2) is still possible.
    std::bitset<8> open;
    for (int k = 1; 2 * k <= n; ++k) open.set(static_cast<std::size_t>(k));
    Integer best_p = 0;
    std::vector<ModPoly> best;
    unsigned used = 0;
    for (unsigned long p = 2; used < kScreenPrimes; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p)) || mpz_divisible_ui_p(d.get_mpz_t(), p)) continue;
        ++used;
        const Integer P = p;
        const FactorizationModP fac = factor_mod_p(f, P);
        std::bitset<8> sums;
        sums.set(0);
        for (const auto& [g, e] : fac.factors) sums |= sums << static_cast<std::size_t>(g.degree());
        open &= sums;
        if (open.none()) return true;
        if (best.empty() || fac.factors.size() < best.size()) {
            best.clear();
            for (const auto& [g, e] : fac.factors) best.push_back(g);
            best_p = P;
        }
    }

    // Any monic factor has coefficients bounded by 2^n * sum |a_i|.
    Integer bound = 0;
    for (const auto& c : f.coeffs()) bound += abs(c);
    bound <<= static_cast<unsigned>(n);
    unsigned k = 1;
    Integer pk = best_p;
    while (pk <= 2 * bound) {
        pk *= best_p;
        ++k;
    }
    const std::vector<IntPoly> lifted = hensel_all(f, best, 0, best_p, k);
    const std::size_t r = lifted.size();
    for (unsigned long mask = 1; mask + 1 < (1ul << r); ++mask) {
        int deg = 0;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) deg += lifted[i].degree();
        if (deg > n / 2 || !open.test(static_cast<std::size_t>(deg))) continue;
        IntPoly g = IntPoly::constant(1);
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1) g = reduce_mod(g * lifted[i], pk);
        g = symmetric(g, pk);
        if (divmod_monic(f, g).second.is_zero()) return false;
    }
    return true;
}

}  // namespace indexlab
