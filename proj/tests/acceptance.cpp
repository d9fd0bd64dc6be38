// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "indexlab/families.hpp"
#include "indexlab/invariants.hpp"
#include "indexlab/number_field.hpp"
#include "indexlab/report_io.hpp"
#include "indexlab/search.hpp"
#include "oracles.hpp"

using namespace indexlab;

namespace {

struct FieldRecord {
    std::string label;
    int degree = 0;
    Integer i_K, I_K;
    std::map<unsigned, PrimeValuations> valuations;
    std::set<unsigned> maccluer;
};

std::vector<FieldRecord> g_fields;
SearchOptions g_opt;

void record(const VerificationReport& r)
{
    for (const auto& row : r.rows)
        if (row.applicable)
            g_fields.push_back({row.family + " " + row.param, row.degree, row.i_exact, row.I_exact, row.valuations, row.maccluer});
}

void record(const std::string& label, int degree, const InvariantReport& r)
{
    g_fields.push_back({label, degree, r.i_K, r.I_K, r.valuations, r.maccluer});
}

std::string sweep_summary(const VerificationReport& r)
{
    std::ostringstream s;
    s << r.passed() << "/" << r.applicable() << " agree";
    for (const auto* d : r.discrepancies())
        s << "; discrepancy m=" << d->param << " I_pred=" << (d->prediction.I_pred ? d->prediction.I_pred->get_str() : "-")
          << " I=" << d->I_exact.get_str() << " i_pred=" << integer_set(d->prediction.i_pred) << " i=" << d->i_exact.get_str();
    return s.str();
}

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome sweep(Family f, const Integer& lo, const Integer& hi)
{
    const VerificationReport r = verify_family(f, lo, hi, g_opt);
    record(r);
    return {r.ok() && r.applicable() > 0, sweep_summary(r)};
}

Outcome pure_cubic()
{
    const VerificationReport pos = verify_family(Family::PureCubic, 2, 100, g_opt);
    const VerificationReport neg = verify_family(Family::PureCubic, -100, -2, g_opt);
    record(pos);
    record(neg);
    return {pos.ok() && neg.ok() && pos.applicable() > 0 && neg.applicable() > 0,
            "[2,100]: " + sweep_summary(pos) + ", [-100,-2]: " + sweep_summary(neg)};
}

Outcome simplest_cubic()
{
    const VerificationReport r = verify_family(Family::SimplestCubic, 0, 486, g_opt);
    record(r);
    std::set<unsigned long> residues;
    for (const auto& row : r.rows)
        if (row.applicable) residues.insert(mod_floor(Integer(row.param), 243).get_ui());
    return {r.ok() && residues.size() == 243, sweep_summary(r) + ", " + std::to_string(residues.size()) + "/243 residues"};
}

Outcome sextic()
{
    std::vector<Integer> params;
    for (long m = 1; m <= 60; ++m) params.push_back(m);
    for (long m : {120L, 363L, 444L}) params.push_back(m);
    const VerificationReport r = verify_family(Family::SimplestSextic, params, g_opt);
    record(r);
    bool ok = r.applicable() > 0;
    for (const auto& row : r.rows) {
        if (!row.applicable) continue;
        const Integer m(row.param);
        const unsigned beta = (mod_floor(m, 243) == 39 || mod_floor(m, 243) == 120 || mod_floor(m, 243) == 201) ? 2 : 0;
        const unsigned v2 = row.valuations.at(2).v_i, v3 = row.valuations.at(3).v_i;
        bool in_set = false;
        for (const Integer& i : row.prediction.i_pred) in_set = in_set || valuation_unchecked(i, 2) == v2;
        ok = ok && row.I_exact == 1 && v3 == beta && in_set && row.pass;
    }
    std::map<unsigned, int> alpha_counts;
    std::string table;
    for (const auto& [m, a] : r.alpha_table()) {
        ++alpha_counts[a];
        table += (table.empty() ? "" : " ") + m + ":" + std::to_string(a);
    }
    std::string counts;
    for (const auto& [a, c] : alpha_counts) counts += " alpha=" + std::to_string(a) + " x" + std::to_string(c);
    std::cout << "  measured alpha per m: " << table << "\n";
    return {ok && r.ok(), sweep_summary(r) + "," + counts};
}

Outcome search_witnesses()
{
    bool ok = true;
    std::string detail;
    for (unsigned n = 2; n <= 6; ++n)
        for (unsigned p : primes_up_to(n)) {
            const auto w = search_theorem1(n, p);
            const bool hit = w && w->report.i_K % p == 0;
            ok = ok && hit;
            detail += " (" + std::to_string(n) + "," + std::to_string(p) + ")" + (hit ? "" : "MISSING");
            if (w) record("search n=" + std::to_string(n) + " p=" + std::to_string(p) + " " + w->poly.to_string(), n, w->report);
        }
    return {ok, "found" + detail};
}

Outcome maccluer_consistency()
{
    std::size_t bad = 0;
    std::string first;
    for (const auto& f : g_fields) {
        std::set<unsigned> support;
        for (const auto& [p, e] : factor_integer(f.i_K)) support.insert(p.get_ui());
        if (f.i_K == 1) support.clear();
        if (support != f.maccluer) {
            if (!bad++) first = "; first mismatch: " + f.label;
        }
    }
    return {bad == 0 && !g_fields.empty(), std::to_string(g_fields.size() - bad) + "/" + std::to_string(g_fields.size()) + " fields" + first};
}

Outcome discriminant_identity()
{
    std::mt19937_64 rng(20240601);
    const auto fields = oracle::corpus();
    std::size_t checked = 0, bad = 0;
    std::string first;
    for (const auto& f : fields) {
        const NumberField k = build_field(f);
        record("corpus " + f.to_string(), k.degree(), full_report(k, g_opt));
        int accepted = 0;
        while (accepted < 200) {
            const AlgebraicInt t = oracle::random_element(k, rng, 10);
            const Integer idx = oracle::index(k, t);
            if (idx == 0) continue;
            ++accepted;
            const Integer d = poly_discriminant(char_poly(k, t));
            for (unsigned p : {2u, 3u, 5u, 7u}) {
                ++checked;
                if (valuation_unchecked(d, p) != 2 * valuation_unchecked(idx, p) + valuation_unchecked(k.disc(), p)) {
                    if (!bad++) first = "; first failure in " + f.to_string();
                }
            }
        }
    }
    return {bad == 0 && fields.size() == 20,
            std::to_string(fields.size()) + " fields x 200 elements, " + std::to_string(checked - bad) + "/" + std::to_string(checked) + " prime checks" + first};
}

Outcome factorial_bound()
{
    std::size_t checks = 0, bad = 0;
    for (const auto& f : g_fields)
        for (const auto& [p, v] : f.valuations) {
            ++checks;
            if (v.v_i > valuation_unchecked(factorial(f.degree), p)) ++bad;
        }
    return {bad == 0 && checks > 0, std::to_string(checks - bad) + "/" + std::to_string(checks) + " (field, prime) pairs"};
}

Outcome dedekind_example()
{
    const NumberField k = build_field(parse_poly("x^3 - x^2 - 2*x - 8"));
    const InvariantReport r = full_report(k, g_opt);
    const SplittingType s = split_prime(k, 2);
    const SplittingType split{{{1, 1}, {1, 1}, {1, 1}}};
    const bool ok = r.I_K % 2 == 0 && r.i_K % 2 == 0 && s == split;
    return {ok, "I(K)=" + r.I_K.get_str() + " i(K)=" + r.i_K.get_str() + " splitting of 2 " + s.to_string()};
}

Outcome divisor_direction()
{
    std::size_t bad = 0, converse_failures = 0;
    std::string example, first;
    for (const auto& f : g_fields)
        for (const auto& [p, v] : f.valuations) {
            if (v.v_I > 0 && v.v_i == 0 && !bad++) first = "; violated by " + f.label;
            if (v.v_i > 0 && v.v_I == 0) {
                if (!converse_failures++) example = f.label + " at p=" + std::to_string(p);
            }
        }
    return {bad == 0 && converse_failures > 0,
            "no violations of v_p(I)>0 => v_p(i)>0 in " + std::to_string(g_fields.size()) + " fields; converse fails " +
                std::to_string(converse_failures) + " times, e.g. " + example + first};
}

}  // namespace

int main()
{
    g_opt.jobs = std::max(1u, std::thread::hardware_concurrency());
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"quadratic family, squarefree m in [-200, 200]", [] { return sweep(Family::Quadratic, -200, 200); }},
        {"cubic x^3 - a x + b, reduced (a, b) in [-30, 30]^2", [] { return sweep(Family::Cubic, -30, 30); }},
        {"pure cubic, cube-free d in [2, 100] and [-100, -2]", pure_cubic},
        {"simplest cubic, m in [0, 486]", simplest_cubic},
        {"simplest quartic, m in [1, 64]", [] { return sweep(Family::SimplestQuartic, 1, 64); }},
        {"Lehmer quintic, m in [-20, 20]", [] { return sweep(Family::LehmerQuintic, -20, 20); }},
        {"simplest sextic, m in [1, 60] and {120, 363, 444}", sextic},
        {"degree-n field with p | i(K) for 2 <= n <= 6, p <= n", search_witnesses},
        {"support of i(K) equals primes with at least p prime ideals", maccluer_consistency},
        {"v_p(disc F_t) = 2 v_p(I(t)) + v_p(D_K) for p <= 7", discriminant_identity},
        {"v_p(i(K)) <= v_p(n!)", factorial_bound},
        {"x^3 - x^2 - 2x - 8: 2 | I(K), 2 | i(K), 2 splits completely", dedekind_example},
        {"v_p(I(K)) > 0 implies v_p(i(K)) > 0, converse fails", divisor_direction},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !o.pass;
        std::printf("%s %2zu  %s  [%s] (%.1fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
