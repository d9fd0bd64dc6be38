#include "indexlab/search.hpp"

#include <functional>
#include <random>

#include "indexlab/errors.hpp"
#include "indexlab/mod_poly.hpp"

namespace indexlab {

namespace {

// Partitions of n (non-increasing parts) in reverse lexicographic order.
void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur, const std::function<bool(const std::vector<unsigned>&)>& visit,
                bool& stop)
{
    if (stop) return;
    if (n == 0) {
        stop = visit(cur);
        return;
    }
    for (unsigned d = std::min(n, max_part); d >= 1 && !stop; --d) {
        cur.push_back(d);
        partitions(n - d, d, cur, visit, stop);
        cur.pop_back();
    }
}

// The first `count` monic irreducibles of degree d over F_p, enumerating
// coefficient vectors as base-p integers.
std::vector<ModPoly> first_irreducibles(const Integer& p, unsigned d, unsigned count)
{
    std::vector<ModPoly> out;
    const unsigned long pl = p.get_ui();
    unsigned long total = 1;
    for (unsigned i = 0; i < d; ++i) total *= pl;
    for (unsigned long k = 0; k < total && out.size() < count; ++k) {
        std::vector<Integer> c(d + 1);
        unsigned long r = k;
        for (unsigned i = 0; i < d; ++i) {
            c[i] = r % pl;
            r /= pl;
        }
        c[d] = 1;
        ModPoly g(p, std::move(c));
        if (is_irreducible(g)) out.push_back(std::move(g));
    }
    return out;
}

std::optional<Theorem1Witness> confirm(const IntPoly& f, unsigned p, const char* method, unsigned attempts)
{
    if (!is_irreducible_over_q(f)) return std::nullopt;
    const NumberField k = build_field(f);
    if (vp_iK(k, p) == 0) return std::nullopt;
    Theorem1Witness w{f, full_report(k), method, attempts};
    if (w.report.valuations.at(p).v_i == 0) return std::nullopt;
    return w;
}

}  // namespace

std::optional<Theorem1Witness> search_theorem1(unsigned n, unsigned p, std::uint64_t seed, unsigned budget)
{
    if (!is_prime(static_cast<std::uint64_t>(p))) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
    if (n < 2 || n > 7) throw Error(ErrorKind::DegreeOutOfScope, "degree must lie in [2, 7]");
    if (p > n) throw Error(ErrorKind::InvalidInput, "p must not exceed the degree");

    const Integer P = p;
    std::vector<unsigned> chosen;
    {
        std::vector<unsigned> cur;
        bool stop = false;
        partitions(n, n, cur, [&](const std::vector<unsigned>& parts) {
            if (parts.size() < p) return false;
            for (unsigned d : parts) {
                const auto mult = static_cast<unsigned long>(std::count(parts.begin(), parts.end(), d));
                if (count_monic_irreducibles(P, d) < mult) return false;
            }
            chosen = parts;
            return true;
        }, stop);
    }

    std::mt19937_64 rng(seed);
    unsigned attempts = 0;
    if (!chosen.empty()) {
        IntPoly g = IntPoly::constant(1);
        for (unsigned d = 1; d <= n; ++d) {
            const auto mult = static_cast<unsigned>(std::count(chosen.begin(), chosen.end(), d));
            if (mult == 0) continue;
            for (const auto& h : first_irreducibles(P, d, mult)) g = g * h.lift();
        }
        std::uniform_int_distribution<int> coeff(-3, 3);
        for (; attempts < budget / 2;) {
            std::vector<Integer> h(n, Integer(0));
            if (attempts > 0)
                for (auto& c : h) c = coeff(rng);
            ++attempts;
            const IntPoly f = g + P * IntPoly(std::move(h));
            if (auto w = confirm(f, p, "targeted", attempts)) return w;
        }
    }

    std::uniform_int_distribution<int> coeff(-10, 10);
    while (attempts < budget) {
        std::vector<Integer> c(n + 1, Integer(1));
        for (unsigned i = 0; i < n; ++i) c[i] = coeff(rng);
        ++attempts;
        if (auto w = confirm(IntPoly(std::move(c)), p, "random", attempts)) return w;
    }
    return std::nullopt;
}

FieldComparison compare_fields(const NumberField& k1, const NumberField& k2, unsigned p, const SearchOptions& opt)
{
    if (k1.degree() != k2.degree())
        throw Error(ErrorKind::InvalidInput, "fields have different degrees " + std::to_string(k1.degree()) + " and " +
                                                 std::to_string(k2.degree()));
    FieldComparison c;
    c.split1 = split_prime(k1, p);
    c.split2 = split_prime(k2, p);
    c.same_splitting = c.split1 == c.split2;
    c.val1 = {vp_iK(k1, p, opt), vp_IK(k1, p, opt)};
    c.val2 = {vp_iK(k2, p, opt), vp_IK(k2, p, opt)};
    c.splitting_insufficient = c.same_splitting && c.val1.v_I != c.val2.v_I;
    return c;
}

}  // namespace indexlab
