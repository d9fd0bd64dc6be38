#include "indexlab/number_field.hpp"

#include <algorithm>
#include <mutex>

#include "indexlab/berkowitz.hpp"
#include "indexlab/errors.hpp"
#include "indexlab/fp_linalg.hpp"
#include "indexlab/mod_poly.hpp"

namespace indexlab {

bool SplittingType::ramified() const
{
    return std::any_of(pairs.begin(), pairs.end(), [](const auto& ef) { return ef.first > 1; });
}

unsigned SplittingType::degree() const
{
    unsigned s = 0;
    for (const auto& [e, f] : pairs) s += e * f;
    return s;
}

std::string SplittingType::to_string() const
{
    std::string s;
    for (const auto& [e, f] : pairs) s += "(" + std::to_string(e) + "," + std::to_string(f) + ")";
    return s;
}

namespace {

void require_prime(const Integer& p)
{
    if (!is_prime(p)) throw Error(ErrorKind::InvalidPrime, p.get_str() + " is not prime");
}

std::vector<Integer> padded(const IntPoly& p, std::size_t n)
{
    std::vector<Integer> v(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i) v[i] = p.coeff(i);
    return v;
}

// Coordinates x with sum_i x_i omega_i = (sum_j num_j t^j) / den.
std::optional<std::vector<Integer>> solve_coords(const Order& o, const std::vector<Integer>& num, const Integer& den)
{
    const std::size_t n = o.basis.rows();
    std::vector<Integer> x(n);
    for (std::size_t jj = n; jj-- > 0;) {
        Integer s = o.denom * num[jj];
        for (std::size_t i = jj + 1; i < n; ++i) s -= den * x[i] * o.basis(i, jj);
        const Integer d = den * o.basis(jj, jj);
        if (!mpz_divisible_p(s.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
        mpz_divexact(x[jj].get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
    }
    return x;
}

Order order_from_generators(const std::vector<std::vector<Integer>>& gens, const Integer& den, std::size_t n)
{
    std::vector<std::vector<Integer>> rev(gens.size(), std::vector<Integer>(n));
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) rev[r][c] = gens[r][n - 1 - c];
    IntMatrix h = lattice_hnf(rev, n);
    if (h.rows() != n) throw Error(ErrorKind::RankDeficient, "order generators do not span");
    Order o{IntMatrix(n, n), den};
    Integer g = den;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            o.basis(i, j) = h(n - 1 - i, n - 1 - j);
            g = gcd(g, o.basis(i, j));
        }
    if (g != 1) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) mpz_divexact(o.basis(i, j).get_mpz_t(), o.basis(i, j).get_mpz_t(), g.get_mpz_t());
        mpz_divexact(o.denom.get_mpz_t(), o.denom.get_mpz_t(), g.get_mpz_t());
    }
    return o;
}

std::vector<Integer> structure_constants(const IntPoly& f, const Order& o)
{
    const std::size_t n = static_cast<std::size_t>(f.degree());
    std::vector<IntPoly> w;
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(o.basis.row(i));
    const Integer den2 = o.denom * o.denom;
    std::vector<Integer> t(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            IntPoly prod = divmod_monic(w[i] * w[j], f).second;
            auto x = solve_coords(o, padded(prod, n), den2);
            if (!x) throw Error(ErrorKind::InvalidInput, "basis is not closed under multiplication");
            for (std::size_t k = 0; k < n; ++k) {
                t[(i * n + j) * n + k] = (*x)[k];
                t[(j * n + i) * n + k] = (*x)[k];
            }
        }
    return t;
}

Integer order_index(const Order& o)
{
    const std::size_t n = o.basis.rows();
    Integer num = ipow(o.denom, n), diag = 1;
    for (std::size_t i = 0; i < n; ++i) diag *= o.basis(i, i);
    return num / diag;
}

/* Arithmetic in O/pO through the structure constants. */
struct ResidueAlgebra {
    std::size_t n;
    Integer p;
    std::vector<Integer> table;  // reduced mod p

    ResidueAlgebra(const std::vector<Integer>& t, std::size_t n_, const Integer& p_) : n(n_), p(p_), table(t)
    {
        for (auto& x : table) x = mod_floor(x, p);
    }

    FpVector mul(const FpVector& a, const FpVector& b) const
    {
        FpVector r(n, Integer(0));
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (b[j] == 0) continue;
                const Integer ab = a[i] * b[j];
                const Integer* row = &table[(i * n + j) * n];
                for (std::size_t k = 0; k < n; ++k) r[k] += ab * row[k];
            }
        }
        for (auto& x : r) x = mod_floor(x, p);
        return r;
    }

    FpVector power(FpVector base, Integer e) const
    {
        FpVector r(n, Integer(0));
        r[0] = 1;  // omega_0 = 1
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
        return r;
    }

    FpVector unit(std::size_t i) const
    {
        FpVector v(n, Integer(0));
        v[i] = 1;
        return v;
    }

    // Smallest p^j >= n: x -> x^q kills the radical.
    Integer frobenius_exponent() const
    {
        Integer q = p;
        while (q < static_cast<unsigned long>(n)) q *= p;
        return q;
    }

    FpRows matrix_of(const FpVector& a) const
    {
        FpRows m;
        for (std::size_t j = 0; j < n; ++j) m.push_back(mul(a, unit(j)));
        return m;
    }
};

// y with y * ib = v for upper triangular ib.
std::vector<Integer> solve_upper(const IntMatrix& ib, const std::vector<Integer>& v)
{
    const std::size_t n = ib.rows();
    std::vector<Integer> y(n);
    for (std::size_t c = 0; c < n; ++c) {
        Integer s = v[c];
        for (std::size_t l = 0; l < c; ++l) s -= y[l] * ib(l, c);
        mpz_divexact(y[c].get_mpz_t(), s.get_mpz_t(), ib(c, c).get_mpz_t());
    }
    return y;
}

/* One prime of the Round-2 loop: with I_p the radical of pO, the ring of
 * multipliers of I_p is U/p for U = {a in O : a I_p in p I_p}; the order is
 * p-maximal exactly when U = pO. */
Order round2(const IntPoly& f, Order o, const Integer& p)
{
    const std::size_t n = static_cast<std::size_t>(f.degree());
    for (;;) {
        const std::vector<Integer> table = structure_constants(f, o);
        const ResidueAlgebra alg(table, n, p);
        const Integer q = alg.frobenius_exponent();

        FpRows frob;
        for (std::size_t i = 0; i < n; ++i) frob.push_back(alg.power(alg.unit(i), q));
        std::vector<std::vector<Integer>> gens = left_kernel_mod(frob, n, p);
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Integer> v(n, Integer(0));
            v[i] = p;
            gens.push_back(std::move(v));
        }
        const IntMatrix ib = lattice_hnf(gens, n);

        FpRows rows(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t l = 0; l < n; ++l) {
                std::vector<Integer> v(n, Integer(0));
                for (std::size_t k = 0; k < n; ++k) {
                    if (ib(l, k) == 0) continue;
                    const Integer* row = &table[(i * n + k) * n];
                    for (std::size_t c = 0; c < n; ++c) v[c] += ib(l, k) * row[c];
                }
                for (auto& y : solve_upper(ib, v)) rows[i].push_back(mod_floor(y, p));
            }
        }
        const FpRows u = left_kernel_mod(rows, n * n, p);
        if (u.empty()) return o;

        std::vector<std::vector<Integer>> pg;
        for (const auto& uv : u) {
            std::vector<Integer> g(n, Integer(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j <= i; ++j) g[j] += uv[i] * o.basis(i, j);
            pg.push_back(std::move(g));
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<Integer> g = o.basis.row(i);
            for (auto& x : g) x *= p;
            pg.push_back(std::move(g));
        }
        o = order_from_generators(pg, o.denom * p, n);
    }
}

Order equation_order(std::size_t n) { return Order{IntMatrix::identity(n), Integer(1)}; }

std::vector<std::pair<unsigned, unsigned>> sorted_pairs(std::vector<std::pair<unsigned, unsigned>> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

bool dedekind_test(const IntPoly& f, const Integer& p)
{
    require_prime(p);
    const FactorizationModP fac = factor_mod_p(f, p);
    IntPoly g = IntPoly::constant(1), h = IntPoly::constant(1);
    for (const auto& [gi, e] : fac.factors) {
        const IntPoly lifted = gi.lift();
        g = g * lifted;
        for (unsigned k = 1; k < e; ++k) h = h * lifted;
    }
    const IntPoly t = (g * h - f).divided_exactly(p);
    ModPoly d = gcd(ModPoly::reduce(t, p), ModPoly::reduce(g, p));
    d = gcd(d, ModPoly::reduce(h, p));
    return d.degree() == 0;
}

PMaximalOrder p_maximal_order(const IntPoly& f, const Integer& p)
{
    require_prime(p);
    if (!f.is_monic() || f.degree() < 1) throw Error(ErrorKind::InvalidInput, "defining polynomial must be monic");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    Order o = dedekind_test(f, p) ? equation_order(n) : round2(f, equation_order(n), p);
    const Integer idx = order_index(o);
    return {std::move(o), valuation_unchecked(idx, p.get_ui())};
}

NumberField build_field(const IntPoly& f)
{
    if (f.degree() < 1) throw Error(ErrorKind::InvalidDegree, "defining polynomial must have degree >= 1");
    if (f.degree() > kMaxDegree) throw Error(ErrorKind::DegreeOutOfScope, "degree " + std::to_string(f.degree()) + " exceeds 7");
    if (!f.is_monic()) throw Error(ErrorKind::InvalidInput, "defining polynomial must be monic");
    if (!is_irreducible_over_q(f)) throw Error(ErrorKind::ReduciblePolynomial, f.to_string() + " is reducible over Q");

    const std::size_t n = static_cast<std::size_t>(f.degree());
    NumberField k;
    k.f_ = f;
    k.poly_disc_ = poly_discriminant(f);
    k.order_ = equation_order(n);
    for (const auto& [p, e] : factor_integer(k.poly_disc_)) {
        if (e < 2 || dedekind_test(f, p)) continue;
        k.order_ = round2(f, k.order_, p);
    }
    k.equation_index_ = order_index(k.order_);
    k.disc_ = k.poly_disc_ / (k.equation_index_ * k.equation_index_);
    k.table_ = structure_constants(f, k.order_);
    return k;
}

AlgebraicInt NumberField::rational(const Integer& c) const
{
    AlgebraicInt a{std::vector<Integer>(static_cast<std::size_t>(degree()), Integer(0))};
    a.coords[0] = c;
    return a;
}

AlgebraicInt NumberField::generator() const
{
    const std::size_t n = static_cast<std::size_t>(degree());
    if (n == 1) return AlgebraicInt{{-f_.coeff(0)}};
    std::vector<Integer> num(n, Integer(0));
    num[1] = 1;
    return *from_power_basis(num, 1);
}

AlgebraicInt NumberField::add(const AlgebraicInt& a, const AlgebraicInt& b) const
{
    AlgebraicInt r = a;
    for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
    return r;
}

AlgebraicInt NumberField::multiply(const AlgebraicInt& a, const AlgebraicInt& b) const
{
    const std::size_t n = static_cast<std::size_t>(degree());
    AlgebraicInt r{std::vector<Integer>(n, Integer(0))};
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (b.coords[j] == 0) continue;
            const Integer ab = a.coords[i] * b.coords[j];
            for (std::size_t k = 0; k < n; ++k) r.coords[k] += ab * table_[(i * n + j) * n + k];
        }
    }
    return r;
}

std::optional<AlgebraicInt> NumberField::from_power_basis(const std::vector<Integer>& num, const Integer& den) const
{
    if (num.size() != static_cast<std::size_t>(degree()) || den == 0)
        throw Error(ErrorKind::InvalidInput, "bad power-basis element");
    auto x = solve_coords(order_, num, den);
    if (!x) return std::nullopt;
    return AlgebraicInt{std::move(*x)};
}

std::vector<Integer> NumberField::to_power_basis(const AlgebraicInt& a) const
{
    const std::size_t n = static_cast<std::size_t>(degree());
    std::vector<Integer> v(n, Integer(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) v[j] += a.coords[i] * order_.basis(i, j);
    return v;
}

IntMatrix NumberField::multiplication_matrix(const AlgebraicInt& a) const
{
    const std::size_t n = static_cast<std::size_t>(degree());
    if (a.coords.size() != n) throw Error(ErrorKind::InvalidInput, "coordinate vector has wrong length");
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coords[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m(j, k) += a.coords[i] * table_[(i * n + j) * n + k];
    }
    return m;
}

SplittingType NumberField::splitting(const Integer& p) const
{
    {
        std::shared_lock lock(cache_->mutex);
        auto it = cache_->entries.find(p);
        if (it != cache_->entries.end()) return it->second;
    }
    SplittingType s = dedekind_test(f_, p) ? split_prime_dedekind(f_, p) : split_prime_algebra(*this, p);
    std::unique_lock lock(cache_->mutex);
    return cache_->entries.emplace(p, std::move(s)).first->second;
}

SplittingType split_prime(const NumberField& k, const Integer& p) { return k.splitting(p); }

SplittingType split_prime_dedekind(const IntPoly& f, const Integer& p)
{
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (const auto& [g, e] : factor_mod_p(f, p).factors) pairs.emplace_back(e, static_cast<unsigned>(g.degree()));
    return SplittingType{sorted_pairs(std::move(pairs))};
}

namespace {

// Characteristic polynomial of an n x n matrix over F_p.
ModPoly char_poly_mod(const FpRows& m, const Integer& p)
{
    const std::size_t n = m.size();
    std::vector<Integer> a(n * n), out(n + 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m[i][j];
    berkowitz(IntegerRing{}, a.data(), static_cast<int>(n), out.data());
    return ModPoly(p, std::move(out));
}

FpVector axpy(const FpVector& x, const Integer& c, const FpVector& y, const Integer& p)
{
    FpVector r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = mod_floor(x[i] + c * y[i], p);
    return r;
}

bool is_zero_vec(const FpVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

// Splits idempotent eps by the eigenvalues of z (an element of eps*A fixed by Frobenius).
std::vector<FpVector> split_idempotent(const ResidueAlgebra& alg, const FpVector& eps, const FpVector& z)
{
    const Integer& p = alg.p;
    std::vector<Integer> roots;
    for (const auto& [g, e] : factor_mod_p(char_poly_mod(alg.matrix_of(z), p)).factors) {
        if (g.degree() != 1) throw Error(ErrorKind::InvalidInput, "Frobenius-fixed element with non-rational eigenvalue");
        roots.push_back(mod_floor(-g.coeffs()[0], p));
    }
    if (roots.size() <= 1) return {eps};
    const FpVector one = alg.unit(0);
    std::vector<FpVector> out;
    for (const auto& c : roots) {
        FpVector e = eps;
        for (const auto& c2 : roots) {
            if (c2 == c) continue;
            Integer inv;
            const Integer diff = mod_floor(c - c2, p);
            mpz_invert(inv.get_mpz_t(), diff.get_mpz_t(), p.get_mpz_t());
            FpVector factor = axpy(z, -c2, one, p);
            for (auto& x : factor) x = mod_floor(x * inv, p);
            e = alg.mul(e, factor);
        }
        if (!is_zero_vec(e)) out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

SplittingType split_prime_algebra(const NumberField& k, const Integer& p)
{
    require_prime(p);
    const std::size_t n = static_cast<std::size_t>(k.degree());
    const ResidueAlgebra alg(k.mult_table(), n, p);

    FpRows fixed_rows;
    for (std::size_t i = 0; i < n; ++i) {
        FpVector v = alg.power(alg.unit(i), p);
        v[i] -= 1;
        for (auto& x : v) x = mod_floor(x, p);
        fixed_rows.push_back(std::move(v));
    }
    const FpRows fixed = left_kernel_mod(fixed_rows, n, p);
    const std::size_t r = fixed.size();

    std::vector<FpVector> idem{alg.unit(0)};
    for (std::size_t b = 0; b < fixed.size() && idem.size() < r; ++b) {
        std::vector<FpVector> next;
        for (const auto& eps : idem)
            for (auto& e : split_idempotent(alg, eps, alg.mul(eps, fixed[b]))) next.push_back(std::move(e));
        idem = std::move(next);
    }
    if (idem.size() != r) throw Error(ErrorKind::InvalidInput, "idempotent decomposition incomplete");

    const Integer q = alg.frobenius_exponent();
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (const auto& eps : idem) {
        FpRows comp, resid;
        for (std::size_t i = 0; i < n; ++i) {
            comp.push_back(alg.mul(eps, alg.unit(i)));
            resid.push_back(alg.power(comp.back(), q));
        }
        const auto d = static_cast<unsigned>(rank_mod(comp, p));
        const auto f = static_cast<unsigned>(rank_mod(resid, p));
        pairs.emplace_back(d / f, f);
    }
    return SplittingType{sorted_pairs(std::move(pairs))};
}

IntPoly char_poly(const NumberField& k, const AlgebraicInt& t)
{
    const IntMatrix m = k.multiplication_matrix(t);
    const int n = k.degree();
    std::vector<Integer> a(static_cast<std::size_t>(n * n)), out(static_cast<std::size_t>(n + 1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * n + j)] = m(i, j);
    berkowitz(IntegerRing{}, a.data(), n, out.data());
    return IntPoly(std::move(out));
}

std::optional<Integer> index_of(const NumberField& k, const AlgebraicInt& t)
{
    const Integer d = poly_discriminant(char_poly(k, t));
    if (d == 0) return std::nullopt;
    if (!mpz_divisible_p(d.get_mpz_t(), k.disc().get_mpz_t()))
        throw Error(ErrorKind::InvalidInput, "element discriminant not divisible by the field discriminant");
    Integer q = d / k.disc();
    if (q < 0 || !mpz_perfect_square_p(q.get_mpz_t()))
        throw Error(ErrorKind::InvalidInput, "discriminant quotient is not a square");
    Integer s;
    mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
    return s;
}

bool is_primitive(const NumberField& k, const AlgebraicInt& t) { return poly_discriminant(char_poly(k, t)) != 0; }

}  // namespace indexlab
