// indexlab: index invariants of number fields from the command line.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "indexlab/errors.hpp"
#include "indexlab/families.hpp"
#include "indexlab/invariants.hpp"
#include "indexlab/number_field.hpp"
#include "indexlab/report_io.hpp"
#include "indexlab/search.hpp"

using namespace indexlab;

namespace {

enum Exit : int { kOk = 0, kDiscrepancy = 1, kUsage = 2, kInvalidField = 3, kBudget = 4 };

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::ReduciblePolynomial:
    case ErrorKind::NotAField:
    case ErrorKind::DegreeOutOfScope:
    case ErrorKind::InvalidDegree:
        return kInvalidField;
    default:
        return kUsage;
    }
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
    out << text;
}

std::string render(const nlohmann::json& j) { return j.dump(2) + "\n"; }

// "A..B" or "a,b,c".
struct Params {
    bool is_range = false;
    Integer lo, hi;
    std::vector<Integer> list;
};

Params parse_params(const std::string& text)
{
    Params p;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        p.is_range = true;
        p.lo = parse_integer(text.substr(0, dots));
        p.hi = parse_integer(text.substr(dots + 2));
        if (p.hi < p.lo) throw Error(ErrorKind::ParseError, "empty range " + text);
        return p;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) p.list.push_back(parse_integer(item));
    if (p.list.empty()) throw Error(ErrorKind::ParseError, "no parameters in '" + text + "'");
    return p;
}

std::vector<unsigned> parse_primes(const std::string& text)
{
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const Integer p = parse_integer(item);
        if (p < 2 || !is_prime(p) || !p.fits_uint_p()) throw Error(ErrorKind::InvalidPrime, item + " is not a prime");
        out.push_back(static_cast<unsigned>(p.get_ui()));
    }
    return out;
}

SearchOptions options(unsigned jobs, int cap)
{
    SearchOptions o;
    o.jobs = std::max(1u, jobs);
    if (cap > 0) o.cap = static_cast<unsigned>(cap);
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Index invariants I(K) and i(K) of number fields of degree at most 7"};
    app.require_subcommand(1);

    std::string format = "json", out_path;
    unsigned jobs = 1;
    int cap = 0;

    auto* inv = app.add_subcommand("invariants", "Report discriminant, splitting, I(K), i(K) and a good element");
    std::string poly_text, primes_text;
    inv->add_option("poly", poly_text, "Defining polynomial, e.g. \"x^3 - x + 3\" or \"[3,-1,0,1]\"")->required();
    inv->add_option("--primes", primes_text, "Comma-separated primes whose splitting is reported (default: p <= n)");

    auto* ver = app.add_subcommand("verify", "Compare a family's closed forms with the exact engine");
    std::string family_text, range_text;
    ver->add_option("family", family_text, "quadratic, cubic, pure_cubic, simplest_cubic, simplest_quartic, lehmer_quintic, simplest_sextic")
        ->required();
    ver->add_option("--range", range_text, "A..B or a comma-separated list (cubic: box [A,B]^2)")->required();
    ver->add_option("--out", out_path, "Write the report here instead of stdout");

    auto* t1 = app.add_subcommand("search-t1", "Find a degree-n field with p | i(K)");
    unsigned degree = 0, prime = 0, budget = 2000;
    std::uint64_t seed = 1;
    t1->add_option("--degree", degree, "Field degree n (2..7)")->required();
    t1->add_option("--prime", prime, "Prime p <= n")->required();
    t1->add_option("--seed", seed, "Random seed");
    t1->add_option("--budget", budget, "Candidates to examine before giving up");

    auto* cmp = app.add_subcommand("compare", "Compare splitting and index valuations of two fields at p");
    std::string poly1, poly2;
    unsigned cmp_prime = 0;
    cmp->add_option("poly1", poly1)->required();
    cmp->add_option("poly2", poly2)->required();
    cmp->add_option("--prime", cmp_prime)->required();

    for (auto* sub : {inv, ver, t1, cmp}) {
        sub->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
        sub->add_option("--jobs", jobs, "Worker threads");
        sub->add_option("--cap", cap, "Refinement level cap for v_p(I(K)) (overrides INDEXLAB_CAP)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        const SearchOptions opt = options(jobs, cap);
        if (inv->parsed()) {
            const NumberField k = build_field(parse_poly(poly_text));
            InvariantReport r = full_report(k, opt);
            if (!primes_text.empty()) {
                r.splittings.clear();
                for (unsigned p : parse_primes(primes_text)) r.splittings[p] = split_prime(k, p);
            }
            emit(format == "json" ? render(invariants_json(k, r)) : invariants_tsv(k, r), "");
            return kOk;
        }
        if (ver->parsed()) {
            const Family fam = family_from_name(family_text);
            const Params params = parse_params(range_text);
            const VerificationReport r =
                params.is_range ? verify_family(fam, params.lo, params.hi, opt) : verify_family(fam, params.list, opt);
            emit(format == "json" ? render(verification_json(r)) : verification_tsv(r), out_path);
            std::ostream& log = out_path.empty() ? std::cerr : std::cout;
            log << r.family << ": " << r.passed() << "/" << r.applicable() << " applicable parameters agree ("
                << r.rows.size() - r.applicable() << " not applicable)\n";
            for (const auto* d : r.discrepancies())
                log << "discrepancy m=" << d->param << " I_pred=" << (d->prediction.I_pred ? d->prediction.I_pred->get_str() : "-")
                    << " I_exact=" << d->I_exact.get_str() << " i_pred=" << integer_set(d->prediction.i_pred)
                    << " i_exact=" << d->i_exact.get_str() << "\n";
            for (const auto& [m, a] : r.alpha_table()) log << "alpha m=" << m << " measured " << a << "\n";
            return r.ok() ? kOk : kDiscrepancy;
        }
        if (t1->parsed()) {
            const auto w = search_theorem1(degree, prime, seed, budget);
            if (!w) {
                std::cerr << "no field of degree " << degree << " with " << prime << " | i(K) within " << budget
                          << " candidates (seed " << seed << ")\n";
                return kBudget;
            }
            const NumberField k = build_field(w->poly);
            if (format == "json") {
                nlohmann::json j = invariants_json(k, w->report);
                j["search"] = {{"degree", degree}, {"prime", prime}, {"method", w->method}, {"attempts", w->attempts}, {"seed", seed}};
                emit(render(j), "");
            } else {
                emit(invariants_tsv(k, w->report) + "method\t" + w->method + "\nattempts\t" + std::to_string(w->attempts) + "\n", "");
            }
            return kOk;
        }
        if (cmp->parsed()) {
            if (!is_prime(static_cast<std::uint64_t>(cmp_prime))) throw Error(ErrorKind::InvalidPrime, "--prime must be prime");
            const IntPoly f1 = parse_poly(poly1), f2 = parse_poly(poly2);
            if (f1.degree() != f2.degree()) throw Error(ErrorKind::InvalidInput, "polynomials have different degrees");
            const NumberField k1 = build_field(f1), k2 = build_field(f2);
            const FieldComparison c = compare_fields(k1, k2, cmp_prime, opt);
            emit(format == "json" ? render(comparison_json(f1, f2, cmp_prime, c)) : comparison_tsv(f1, f2, cmp_prime, c), "");
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "indexlab: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "indexlab: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
