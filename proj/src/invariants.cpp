#include "indexlab/invariants.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "indexlab/berkowitz.hpp"
#include "indexlab/errors.hpp"
#include "indexlab/kernels.hpp"
#include "indexlab/parallel.hpp"

namespace indexlab {

Integer i_theta(const NumberField& k, const AlgebraicInt& t)
{
    const IntPoly f = char_poly(k, t);
    std::vector<Integer> values;
    for (int x = 0; x <= f.degree(); ++x) values.push_back(f(x));
    return gcd_all(values);
}

namespace {

constexpr std::size_t kBatch = 4096;

std::uint64_t upow(std::uint64_t b, unsigned e)
{
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

unsigned vp_factorial(unsigned n, unsigned p)
{
    unsigned v = 0;
    for (unsigned q = p; q <= n; q *= p) v += n / q;
    return v;
}

// Children of a parent class at `level` (1-based): coordinate i >= 1 gets
// digit_i * p^(level-1), digit_1 varying fastest. Coordinate 0 stays 0.
template <class Word>
void child_coords(const Word* parent, int n, unsigned p, Word step, std::uint64_t index, Word* out)
{
    out[0] = parent[0];
    for (int i = 1; i < n; ++i) {
        out[i] = parent[i] + static_cast<Word>(index % p) * step;
        index /= p;
    }
}

std::vector<Integer> to_integers(const std::uint64_t* c, int n)
{
    std::vector<Integer> v;
    for (int i = 0; i < n; ++i) v.emplace_back(static_cast<unsigned long>(c[i]));
    return v;
}

/* w(t) = min over x of v_p(F_t(x)), capped at b+1, for batches of elements
 * given in structure-of-arrays form. */
class ValueEvaluator {
public:
    ValueEvaluator(const NumberField& k, unsigned p, unsigned b) : n_(k.degree()), p_(p), cap_(b + 1)
    {
        q_ = static_cast<std::uint32_t>(upow(p, b + 1));
        const Integer m = p == 2 ? Integer(1) << 32 : Integer(q_);
        for (const auto& x : k.mult_table()) table_.push_back(static_cast<std::uint32_t>(mod_floor(x, m).get_ui()));
    }

    void evaluate(const std::uint32_t* coords, std::size_t count, unsigned* w) const
    {
        std::vector<std::uint32_t> out(static_cast<std::size_t>(n_ + 1) * count);
        if (p_ == 2)
            kernels::char_values_wrap32(n_, table_.data(), coords, count, out.data());
        else
            kernels::char_values_mod(n_, q_, table_.data(), coords, count, out.data());
        for (std::size_t e = 0; e < count; ++e) {
            unsigned best = cap_;
            for (int x = 0; x <= n_ && best > 0; ++x) {
                std::uint32_t v = out[static_cast<std::size_t>(x) * count + e];
                if (p_ == 2) v &= q_ - 1;
                best = std::min(best, valuation_small(v));
            }
            w[e] = best;
        }
    }

private:
    unsigned valuation_small(std::uint32_t v) const
    {
        if (v == 0) return cap_;
        if (p_ == 2) return static_cast<unsigned>(__builtin_ctz(v));
        unsigned r = 0;
        while (v % p_ == 0) {
            v /= p_;
            ++r;
        }
        return r;
    }

    int n_;
    unsigned p_, cap_;
    std::uint32_t q_;
    std::vector<std::uint32_t> table_;
};

struct LevelResult {
    std::vector<std::uint32_t> survivors;  // flat, n words per class
    bool has_miss = false;
    std::vector<std::uint32_t> first_miss;
    std::size_t evaluated = 0;
};

RefinementNode node_from(const std::uint32_t* c, int n, unsigned level)
{
    RefinementNode node{level, {}};
    for (int i = 0; i < n; ++i) node.coords.emplace_back(static_cast<unsigned long>(c[i]));
    return node;
}

unsigned ik_cap(const NumberField& k, unsigned p, const SearchOptions& opt)
{
    if (opt.cap) return *opt.cap;
    if (const char* env = std::getenv("INDEXLAB_CAP")) {
        try {
            return static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidInput, std::string("INDEXLAB_CAP is not a number: ") + env);
        }
    }
    return default_ik_cap(k, p);
}

// (v_p(disc F_t) - v_p(D_K)) / 2, or nullopt when t is not primitive.
std::optional<unsigned> index_valuation(const NumberField& k, const std::vector<Integer>& coords, unsigned p, unsigned vd)
{
    const Integer d = poly_discriminant(char_poly(k, AlgebraicInt{coords}));
    if (d == 0) return std::nullopt;
    return (valuation_unchecked(d, p) - vd) / 2;
}

Integer crt(const Integer& a, const Integer& m, const Integer& b, const Integer& n)
{
    Integer inv;
    mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    return a + m * mod_floor((b - a) * inv, n);
}

}  // namespace

unsigned default_ik_cap(const NumberField& k, unsigned p)
{
    const unsigned n = static_cast<unsigned>(k.degree());
    return 2 * vp_factorial(n, p) + valuation_unchecked(k.disc(), p) + 2;
}

PrimeSearch vp_iK_search(const NumberField& k, unsigned p, const SearchOptions& opt)
{
    const int n = k.degree();
    if (!is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
    PrimeSearch result;
    result.witness.coords.assign(static_cast<std::size_t>(n), Integer(0));
    if (p > static_cast<unsigned>(n)) return result;

    const unsigned b = vp_factorial(static_cast<unsigned>(n), p);
    const ValueEvaluator eval(k, p, b);
    const std::uint64_t fanout = upow(p, static_cast<unsigned>(n - 1));
    const std::size_t per_chunk = std::max<std::size_t>(1, kBatch / fanout);

    std::vector<std::uint32_t> parents(static_cast<std::size_t>(n), 0);
    for (unsigned m = 1; m <= b; ++m) {
        const auto step = static_cast<std::uint32_t>(upow(p, m - 1));
        const std::size_t nparents = parents.size() / static_cast<std::size_t>(n);
        const std::size_t nchunks = (nparents + per_chunk - 1) / per_chunk;
        const bool last = m == b;
        std::vector<LevelResult> chunks(nchunks);
        std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

        parallel_for(nchunks, opt.jobs, [&](std::size_t ci) {
            if (last && ci > first_hit.load()) return;
            const std::size_t p0 = ci * per_chunk, p1 = std::min(nparents, p0 + per_chunk);
            const std::size_t count = (p1 - p0) * fanout;
            std::vector<std::uint32_t> soa(static_cast<std::size_t>(n) * count);
            std::uint32_t c[kMaxDegree];
            std::size_t e = 0;
            for (std::size_t pi = p0; pi < p1; ++pi)
                for (std::uint64_t d = 0; d < fanout; ++d, ++e) {
                    child_coords(&parents[pi * static_cast<std::size_t>(n)], n, p, step, d, c);
                    for (int i = 0; i < n; ++i) soa[static_cast<std::size_t>(i) * count + e] = c[i];
                }
            std::vector<unsigned> w(count);
            eval.evaluate(soa.data(), count, w.data());
            LevelResult& r = chunks[ci];
            r.evaluated = count;
            for (e = 0; e < count; ++e) {
                if (w[e] >= m) {
                    for (int i = 0; i < n; ++i) r.survivors.push_back(soa[static_cast<std::size_t>(i) * count + e]);
                    if (last) break;
                } else if (!r.has_miss) {
                    r.has_miss = true;
                    for (int i = 0; i < n; ++i) r.first_miss.push_back(soa[static_cast<std::size_t>(i) * count + e]);
                }
            }
            if (last && !r.survivors.empty()) {
                std::size_t cur = first_hit.load();
                while (ci < cur && !first_hit.compare_exchange_weak(cur, ci)) {
                }
            }
        });

        std::vector<std::uint32_t> survivors;
        const std::uint32_t* miss = nullptr;
        for (const auto& r : chunks) {
            result.classes += r.evaluated;
            survivors.insert(survivors.end(), r.survivors.begin(), r.survivors.end());
            if (!miss && r.has_miss) miss = r.first_miss.data();
            if (last && !survivors.empty()) break;
        }
        if (survivors.empty()) {
            result.valuation = m - 1;
            result.witness = node_from(miss, n, m);
            return result;
        }
        if (last) {
            result.valuation = b;
            result.witness = node_from(survivors.data(), n, m);
            return result;
        }
        parents = std::move(survivors);
    }
    return result;  // unreachable: b >= 1 when p <= n
}

unsigned vp_iK(const NumberField& k, unsigned p, const SearchOptions& opt) { return vp_iK_search(k, p, opt).valuation; }

PrimeSearch vp_IK_search(const NumberField& k, unsigned p, const SearchOptions& opt)
{
    const int n = k.degree();
    if (!is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
    PrimeSearch result;
    result.witness.coords.assign(static_cast<std::size_t>(n), Integer(0));
    if (p > static_cast<unsigned>(n)) return result;

    const unsigned vd = valuation_unchecked(k.disc(), p);
    const unsigned cap = ik_cap(k, p, opt);
    const std::vector<Integer> gen = k.generator().coords;

    // The generator is primitive, so its value bounds the minimum.
    unsigned best = *index_valuation(k, gen, p, vd);
    {
        const Integer mod = ipow(p, best + 1);
        result.witness.level = best + 1;
        result.witness.coords.clear();
        for (const auto& c : gen) result.witness.coords.push_back(mod_floor(c, mod));
    }
    if (best == 0) return result;

    const std::uint64_t fanout = upow(p, static_cast<unsigned>(n - 1));
    std::vector<std::uint64_t> parents(static_cast<std::size_t>(n), 0);
    for (unsigned m = 1; m <= cap; ++m) {
        const std::uint64_t step = upow(p, m - 1);
        const Integer pm = ipow(p, m);
        const std::size_t nparents = parents.size() / static_cast<std::size_t>(n);
        const std::size_t total = nparents * fanout;
        std::vector<std::uint64_t> kids(total * static_cast<std::size_t>(n));
        for (std::size_t pi = 0, e = 0; pi < nparents; ++pi)
            for (std::uint64_t d = 0; d < fanout; ++d, ++e)
                child_coords(&parents[pi * static_cast<std::size_t>(n)], n, p, step, d, &kids[e * static_cast<std::size_t>(n)]);

        std::vector<unsigned> values(total);
        parallel_for(total, opt.jobs, [&](std::size_t e) {
            std::vector<Integer> rep = to_integers(&kids[e * static_cast<std::size_t>(n)], n);
            for (unsigned long s = 1;; ++s) {
                if (auto v = index_valuation(k, rep, p, vd)) {
                    values[e] = *v;
                    return;
                }
                // At most one point of this line lies in each proper subfield.
                rep = to_integers(&kids[e * static_cast<std::size_t>(n)], n);
                for (int i = 0; i < n; ++i) rep[static_cast<std::size_t>(i)] += pm * s * gen[static_cast<std::size_t>(i)];
            }
        });
        result.classes += total;

        std::vector<std::uint64_t> undecided;
        for (std::size_t e = 0; e < total; ++e) {
            const std::uint64_t* c = &kids[e * static_cast<std::size_t>(n)];
            if (values[e] < m) {
                if (values[e] < best) {
                    best = values[e];
                    result.witness = RefinementNode{m, to_integers(c, n)};
                }
            } else {
                undecided.insert(undecided.end(), c, c + n);
            }
        }
        if (best == 0 || m >= best || undecided.empty()) {
            result.valuation = best;
            return result;
        }
        parents = std::move(undecided);
    }
    throw Error(ErrorKind::RefinementCapExceeded,
                "v_p(I(K)) search at p=" + std::to_string(p) + " for " + k.defining_poly().to_string() + " still has " +
                    std::to_string(parents.size() / static_cast<std::size_t>(n)) + " undecided classes at level " +
                    std::to_string(cap) + " (best so far " + std::to_string(best) + ")");
}

unsigned vp_IK(const NumberField& k, unsigned p, const SearchOptions& opt) { return vp_IK_search(k, p, opt).valuation; }

std::set<unsigned> maccluer_support(const NumberField& k)
{
    std::set<unsigned> s;
    for (unsigned p : primes_up_to(static_cast<unsigned>(k.degree())))
        if (split_prime(k, p).prime_count() >= p) s.insert(p);
    return s;
}

namespace {

AlgebraicInt assemble_witness(const NumberField& k, const std::map<unsigned, PrimeSearch>& searches, const Integer& i_k)
{
    const AlgebraicInt gen = k.generator();
    if (i_theta(k, gen) == i_k) return gen;
    const std::size_t n = static_cast<std::size_t>(k.degree());
    std::vector<Integer> coords(n, Integer(0));
    Integer modulus = 1;
    for (const auto& [p, s] : searches) {
        const Integer m = ipow(p, s.witness.level);
        for (std::size_t i = 0; i < n; ++i) coords[i] = crt(coords[i], modulus, s.witness.coords[i], m);
        modulus *= m;
    }
    for (auto& c : coords)
        if (2 * c > modulus) c -= modulus;
    for (unsigned long s = 0;; ++s) {
        AlgebraicInt t{coords};
        for (std::size_t i = 0; i < n; ++i) t.coords[i] += modulus * s * gen.coords[i];
        if (!is_primitive(k, t)) continue;
        if (i_theta(k, t) != i_k)
            throw Error(ErrorKind::InvalidInput, "assembled element misses i(K) for " + k.defining_poly().to_string());
        return t;
    }
}

}  // namespace

InvariantReport full_report(const NumberField& k, const SearchOptions& opt)
{
    InvariantReport r;
    r.field_disc = k.disc();
    r.i_K = 1;
    r.I_K = 1;
    std::map<unsigned, PrimeSearch> searches;
    for (unsigned p : primes_up_to(static_cast<unsigned>(k.degree()))) {
        r.splittings[p] = split_prime(k, p);
        if (r.splittings[p].prime_count() >= p) r.maccluer.insert(p);
        PrimeSearch si = vp_iK_search(k, p, opt);
        PrimeValuations v{si.valuation, vp_IK(k, p, opt)};
        r.valuations[p] = v;
        r.i_K *= ipow(p, v.v_i);
        r.I_K *= ipow(p, v.v_I);
        searches.emplace(p, std::move(si));
    }
    r.witness = k.degree() == 1 ? k.generator() : assemble_witness(k, searches, r.i_K);
    r.witness_char_poly = char_poly(k, r.witness);
    return r;
}

AlgebraicInt good_element(const NumberField& k, const SearchOptions& opt)
{
    if (k.degree() == 1) return k.generator();
    std::map<unsigned, PrimeSearch> searches;
    Integer i_k = 1;
    for (unsigned p : primes_up_to(static_cast<unsigned>(k.degree()))) {
        PrimeSearch s = vp_iK_search(k, p, opt);
        i_k *= ipow(p, s.valuation);
        searches.emplace(p, std::move(s));
    }
    return assemble_witness(k, searches, i_k);
}

}  // namespace indexlab
