#include "indexlab/mod_poly.hpp"

#include <algorithm>
#include <functional>

#include "indexlab/errors.hpp"

namespace indexlab {

ModPoly::ModPoly(Integer p, std::vector<Integer> coeffs) : p_(std::move(p)), c_(std::move(coeffs))
{
    for (auto& c : c_) c = mod_floor(c, p_);
    normalize();
}

ModPoly ModPoly::reduce(const IntPoly& f, const Integer& p) { return ModPoly(p, f.coeffs()); }

ModPoly ModPoly::constant(const Integer& p, const Integer& c) { return ModPoly(p, {c}); }

ModPoly ModPoly::x(const Integer& p) { return ModPoly(p, {Integer(0), Integer(1)}); }

void ModPoly::normalize()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

namespace {

Integer inverse_mod(const Integer& a, const Integer& p)
{
    Integer r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw Error(ErrorKind::InvalidInput, "non-invertible residue " + a.get_str() + " mod " + p.get_str());
    return r;
}

}  // namespace

ModPoly ModPoly::monic() const
{
    if (is_zero() || leading() == 1) return *this;
    Integer inv = inverse_mod(leading(), p_);
    std::vector<Integer> r(c_);
    for (auto& c : r) c *= inv;
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::derivative() const
{
    if (c_.size() <= 1) return ModPoly(p_, {});
    std::vector<Integer> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return ModPoly(p_, std::move(d));
}

IntPoly ModPoly::lift() const { return IntPoly(c_); }

ModPoly operator+(const ModPoly& a, const ModPoly& b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return ModPoly(a.p_, std::move(r));
}

ModPoly operator-(const ModPoly& a, const ModPoly& b)
{
    std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
    return ModPoly(a.p_, std::move(r));
}

ModPoly operator*(const ModPoly& a, const ModPoly& b)
{
    if (a.is_zero() || b.is_zero()) return ModPoly(a.p_, {});
    std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return ModPoly(a.p_, std::move(r));
}

std::string ModPoly::to_string() const { return lift().to_string() + " mod " + p_.get_str(); }

std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b)
{
    if (b.is_zero()) throw Error(ErrorKind::InvalidInput, "division by zero polynomial");
    const Integer& p = a.modulus();
    if (a.degree() < b.degree()) return {ModPoly(p, {}), a};
    std::vector<Integer> rem(a.coeffs());
    std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), Integer(0));
    const Integer inv = inverse_mod(b.leading(), p);
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        Integer q = mod_floor(rem[static_cast<std::size_t>(i)] * inv, p);
        quo[static_cast<std::size_t>(i - db)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= db; ++j) {
            Integer& slot = rem[static_cast<std::size_t>(i - db + j)];
            slot = mod_floor(slot - q * b.coeffs()[static_cast<std::size_t>(j)], p);
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

ModPoly gcd(const ModPoly& a, const ModPoly& b)
{
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ModPoly powmod(const ModPoly& base, const Integer& exp, const ModPoly& m)
{
    ModPoly result = ModPoly::constant(m.modulus(), 1) % m;
    ModPoly b = base % m;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % m;
        if (mpz_tstbit(exp.get_mpz_t(), i)) result = (result * b) % m;
    }
    return result;
}

bool canonical_less(const ModPoly& a, const ModPoly& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

unsigned FactorizationModP::total_degree() const
{
    unsigned t = 0;
    for (const auto& [g, e] : factors) t += static_cast<unsigned>(g.degree()) * e;
    return t;
}

namespace {

ModPoly pth_root(const ModPoly& f)
{
    const unsigned long p = f.modulus().get_ui();
    std::vector<Integer> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
    return ModPoly(f.modulus(), std::move(r));
}

// Squarefree decomposition of a monic polynomial: pieces with multiplicity.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& f)
{
    std::vector<std::pair<ModPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        // f is a p-th power; only possible when p fits a machine word.
        for (auto& [q, m] : squarefree_decomposition(pth_root(f))) out.emplace_back(q, m * f.modulus().get_ui());
        return out;
    }
    ModPoly c = gcd(f, d);
    ModPoly w = divmod(f, c).first;
    unsigned i = 1;
    while (!w.is_one()) {
        ModPoly y = gcd(w, c);
        ModPoly z = divmod(w, y).first;
        if (!z.is_one()) out.emplace_back(z.monic(), i);
        ++i;
        w = y;
        c = divmod(c, y).first;
    }
    if (!c.is_one() && c.degree() > 0) {
        for (auto& [q, m] : squarefree_decomposition(pth_root(c.monic()))) out.emplace_back(q, m * f.modulus().get_ui());
    }
    return out;
}

// Distinct-degree factorization of a squarefree monic polynomial.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree(ModPoly g)
{
    std::vector<std::pair<ModPoly, unsigned>> out;
    const Integer& p = g.modulus();
    const ModPoly x = ModPoly::x(p);
    ModPoly h = x % g;
    for (unsigned i = 1; g.degree() >= static_cast<int>(2 * i); ++i) {
        h = powmod(h, p, g);
        ModPoly d = gcd(g, h - x);
        if (!d.is_one()) {
            out.emplace_back(d, i);
            g = divmod(g, d).first;
            h = h % g;
        }
    }
    if (g.degree() > 0) out.emplace_back(g.monic(), static_cast<unsigned>(g.degree()));
    return out;
}

// Calls visit(q) on every monic polynomial of degree d over F_p, canonical order.
void for_each_monic(const Integer& p, unsigned d, const std::function<bool(const ModPoly&)>& visit)
{
    const unsigned long pp = p.get_ui();
    std::vector<unsigned long> digits(d, 0);
    while (true) {
        std::vector<Integer> c(d + 1);
        for (unsigned i = 0; i < d; ++i) c[i] = digits[i];
        c[d] = 1;
        if (!visit(ModPoly(p, std::move(c)))) return;
        // Canonical order compares c0 first, so c0 is the most significant digit.
        int k = static_cast<int>(d) - 1;
        while (k >= 0 && ++digits[static_cast<std::size_t>(k)] == pp) digits[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) return;
    }
}

void equal_degree_exhaustive(ModPoly g, unsigned d, std::vector<ModPoly>& out)
{
    for_each_monic(g.modulus(), d, [&](const ModPoly& q) {
        if (g.degree() < static_cast<int>(d)) return false;
        if (!(g % q).is_zero() || !is_irreducible(q)) return true;
        out.push_back(q);
        g = divmod(g, q).first;
        return g.degree() > 0;
    });
}

void equal_degree_cz(const ModPoly& g, unsigned d, std::vector<ModPoly>& out, gmp_randclass& rng)
{
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g.monic());
        return;
    }
    const Integer& p = g.modulus();
    const Integer exp = (ipow(p, d) - 1) / 2;
    while (true) {
        std::vector<Integer> coeffs(static_cast<std::size_t>(g.degree()));
        for (auto& c : coeffs) c = rng.get_z_range(p);
        ModPoly a(p, std::move(coeffs));
        if (a.degree() <= 0) continue;
        ModPoly b = powmod(a, exp, g) - ModPoly::constant(p, 1);
        ModPoly h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree_cz(h, d, out, rng);
            equal_degree_cz(divmod(g, h).first, d, out, rng);
            return;
        }
    }
}

void equal_degree(const ModPoly& g, unsigned d, std::vector<ModPoly>& out)
{
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const Integer& p = g.modulus();
    if (p == 2 || ipow(p, d) <= 4096) {
        equal_degree_exhaustive(g, d, out);
        return;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(0x1dec5u);
    equal_degree_cz(g, d, out, rng);
}

void require_prime(const Integer& p)
{
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, p.get_str() + " is not prime");
}

}  // namespace

bool is_irreducible(const ModPoly& f)
{
    const int n = f.degree();
    if (n <= 0) return false;
    if (n == 1) return true;
    const ModPoly g = f.monic();
    const Integer& p = f.modulus();
    const ModPoly x = ModPoly::x(p);
    auto frob_power = [&](unsigned k) {
        ModPoly h = x % g;
        for (unsigned i = 0; i < k; ++i) h = powmod(h, p, g);
        return h;
    };
    if (!(frob_power(static_cast<unsigned>(n)) - x % g).is_zero()) return false;
    for (const auto& [r, e] : factor_integer(n)) {
        (void)e;
        ModPoly h = frob_power(static_cast<unsigned>(n / r.get_ui()));
        if (!gcd(g, h - x).is_one()) return false;
    }
    return true;
}

FactorizationModP factor_mod_p(const ModPoly& f)
{
    require_prime(f.modulus());
    if (f.is_zero()) throw Error(ErrorKind::ZeroModP, "polynomial vanishes mod " + f.modulus().get_str());
    FactorizationModP out;
    out.unit = f.leading();
    ModPoly g = f.monic();
    for (const auto& [piece, mult] : squarefree_decomposition(g)) {
        for (const auto& [block, d] : distinct_degree(piece)) {
            std::vector<ModPoly> irr;
            equal_degree(block, d, irr);
            for (auto& q : irr) out.factors.emplace_back(std::move(q), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
}

FactorizationModP factor_mod_p(const IntPoly& f, const Integer& p)
{
    require_prime(p);
    return factor_mod_p(ModPoly::reduce(f, p));
}

bool is_squarefree_mod_p(const IntPoly& f, const Integer& p)
{
    require_prime(p);
    ModPoly g = ModPoly::reduce(f, p);
    if (g.is_zero()) throw Error(ErrorKind::ZeroModP, "polynomial vanishes mod " + p.get_str());
    return gcd(g, g.derivative()).degree() == 0;
}

std::vector<unsigned> factor_degrees_squarefree(const ModPoly& f)
{
    std::vector<unsigned> degs;
    for (const auto& [block, d] : distinct_degree(f.monic()))
        for (int k = 0; k < block.degree() / static_cast<int>(d); ++k) degs.push_back(d);
    std::sort(degs.begin(), degs.end());
    return degs;
}

Integer count_monic_irreducibles(const Integer& p, unsigned f)
{
    require_prime(p);
    if (f == 0) throw Error(ErrorKind::InvalidDegree, "degree must be positive");
    Integer total = 0;
    for (unsigned d = 1; d <= f; ++d) {
        if (f % d != 0) continue;
        // Moebius function of d.
        int mu = 1;
        unsigned m = d;
        for (unsigned q = 2; q * q <= m; ++q) {
            if (m % q) continue;
            m /= q;
            if (m % q == 0) {
                mu = 0;
                break;
            }
            mu = -mu;
        }
        if (mu != 0 && m > 1) mu = -mu;
        if (mu == 0) continue;
        Integer term = ipow(p, f / d);
        total += mu > 0 ? term : Integer(-term);
    }
    return total / f;
}

}  // namespace indexlab
