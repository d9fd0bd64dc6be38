#include "indexlab/families.hpp"

#include <algorithm>
#include <array>

#include "indexlab/errors.hpp"
#include "indexlab/number_field.hpp"
#include "indexlab/parallel.hpp"

namespace indexlab {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 7> kNames{{
    {Family::Quadratic, "quadratic"},
    {Family::Cubic, "cubic"},
    {Family::PureCubic, "pure_cubic"},
    {Family::SimplestCubic, "simplest_cubic"},
    {Family::SimplestQuartic, "simplest_quartic"},
    {Family::LehmerQuintic, "lehmer_quintic"},
    {Family::SimplestSextic, "simplest_sextic"},
}};

unsigned v(const Integer& n, unsigned long p) { return n == 0 ? ~0u : valuation_unchecked(n, p); }

bool in_residues(const Integer& m, unsigned long modulus, std::initializer_list<unsigned long> rs)
{
    const unsigned long r = mod_floor(m, modulus).get_ui();
    return std::find(rs.begin(), rs.end(), r) != rs.end();
}

FamilyPrediction make_prediction(Family f, const Integer& m)
{
    FamilyPrediction p;
    p.family = std::string(family_name(f));
    p.param = m.get_str();
    return p;
}

[[noreturn]] void not_applicable(const std::string& why) { throw Error(ErrorKind::NotApplicable, why); }

bool is_cube(const Integer& d)
{
    Integer r;
    return mpz_root(r.get_mpz_t(), d.get_mpz_t(), 3) != 0;
}

bool cube_free(const Integer& d)
{
    for (const auto& [p, e] : factor_integer(d))
        if (e >= 3) return false;
    return true;
}

Integer lehmer_conductor(const Integer& m) { return (((m + 5) * m + 15) * m + 25) * m + 25; }

}  // namespace

std::string_view family_name(Family f)
{
    for (const auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "unknown";
}

Family family_from_name(std::string_view name)
{
    for (const auto& [fam, n] : kNames)
        if (n == name) return fam;
    throw Error(ErrorKind::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families()
{
    static const std::vector<Family> all = [] {
        std::vector<Family> v;
        for (const auto& [fam, name] : kNames) v.push_back(fam);
        return v;
    }();
    return all;
}

CubicForm CubicForm::make(const Integer& a, const Integer& b)
{
    CubicForm c;
    c.a = a;
    c.b = b;
    c.delta = 4 * a * a * a - 27 * b * b;
    if (c.delta == 0) throw Error(ErrorKind::NotAField, "x^3 - a x + b has a repeated root");
    c.s2 = valuation_unchecked(c.delta, 2);
    c.s3 = valuation_unchecked(c.delta, 3);
    c.delta2 = c.delta / ipow(2, c.s2);
    c.delta3 = c.delta / ipow(3, c.s3);
    return c;
}

bool CubicForm::reduced() const
{
    const Integer g = gcd(a, b);
    if (g == 0) return false;
    for (const auto& [p, e] : factor_integer(g))
        if (v(a, p.get_ui()) >= 2 && v(b, p.get_ui()) >= 3) return false;
    return true;
}

IntPoly cubic_polynomial(const Integer& a, const Integer& b) { return IntPoly(std::vector<Integer>{b, -a, 0, 1}); }

std::pair<Integer, Integer> cubic_reduce(const Integer& a, const Integer& b)
{
    if (!is_irreducible_over_q(cubic_polynomial(a, b)))
        throw Error(ErrorKind::NotAField, "x^3 - (" + a.get_str() + ")x + (" + b.get_str() + ") is reducible");
    Integer ra = a, rb = b;
    for (const auto& [p, e] : factor_integer(gcd(a, b))) {
        const Integer p2 = p * p, p3 = p2 * p;
        while (mpz_divisible_p(ra.get_mpz_t(), p2.get_mpz_t()) && mpz_divisible_p(rb.get_mpz_t(), p3.get_mpz_t())) {
            ra /= p2;
            rb /= p3;
        }
    }
    return {ra, rb};
}

FamilyPrediction cubic_predict(const Integer& a, const Integer& b)
{
    if (!is_irreducible_over_q(cubic_polynomial(a, b)))
        throw Error(ErrorKind::NotAField, "x^3 - (" + a.get_str() + ")x + (" + b.get_str() + ") is reducible");
    const CubicForm c = CubicForm::make(a, b);
    if (!c.reduced()) throw Error(ErrorKind::NotReduced, "(" + a.get_str() + ", " + b.get_str() + ") is not reduced");

    const bool alpha = (v(a, 2) == 1 && v(a, 2) < v(b, 2)) || mod_floor(a - b, 2) != 0;
    const bool beta_a = mod_floor(a, 9) == 3 && mod_floor(b * b - a - 1, 27) == 0 && c.s3 > 6 && c.s3 % 2 == 0 &&
                        mod_floor(c.delta3, 3) == 1;
    const bool beta_b = mod_floor(a, 3) == 1 && mod_floor(b, 3) == 0;
    const bool common2 = mod_floor(a, 2) == 1 && mod_floor(b, 2) == 0 && c.s2 % 2 == 0 && mod_floor(c.delta2, 8) == 1;

    FamilyPrediction p = make_prediction(Family::Cubic, a);
    p.param = a.get_str() + "," + b.get_str();
    p.I_pred = common2 ? 2 : 1;
    p.i_pred = {Integer((alpha ? 2 : 1) * (beta_a || beta_b ? 3 : 1))};
    return p;
}

FamilyPrediction pure_cubic_predict(const Integer& d)
{
    if (is_cube(d)) throw Error(ErrorKind::NotAField, d.get_str() + " is a cube");
    if (!cube_free(d)) not_applicable(d.get_str() + " is not cube-free");
    FamilyPrediction p = make_prediction(Family::PureCubic, d);
    p.i_pred = {Integer(mod_floor(d, 2) == 1 ? 2 : 1)};
    return p;
}

FamilyPrediction simplest_cubic_predict(const Integer& m)
{
    FamilyPrediction p = make_prediction(Family::SimplestCubic, m);
    p.I_pred = 1;
    p.i_pred = {Integer(in_residues(m, 243, {39, 120, 201}) ? 3 : 1)};
    return p;
}

FamilyPrediction simplest_quartic_predict(const Integer& m)
{
    const Integer am = abs(m);
    if (am == 0 || am == 3) not_applicable("m must avoid 0 and +-3");
    const Integer c = am * am + 16;
    if (!is_odd_squarefree(c)) not_applicable("m^2 + 16 = " + c.get_str() + " has an odd square factor");
    FamilyPrediction p = make_prediction(Family::SimplestQuartic, m);
    const unsigned v2 = valuation_unchecked(am, 2);
    p.I_pred = v2 == 0 ? 2 : 1;
    p.i_pred = {Integer(v2 >= 1 && v2 <= 3 ? 1 : 4)};
    return p;
}

FamilyPrediction lehmer_quintic_predict(const Integer& m)
{
    Integer c = lehmer_conductor(m);
    while (mpz_divisible_ui_p(c.get_mpz_t(), 5)) c /= 5;
    if (!is_squarefree(c))
        not_applicable("m^4+5m^3+15m^2+25m+25 = " + lehmer_conductor(m).get_str() + " has a square factor other than 5");
    FamilyPrediction p = make_prediction(Family::LehmerQuintic, m);
    p.I_pred = 1;
    p.i_pred = {Integer(in_residues(m, 5, {2}) ? 5 : 1)};
    return p;
}

FamilyPrediction simplest_sextic_predict(const Integer& m)
{
    if (m == -8 || m == -5 || m == -3 || m == 0) not_applicable("m is one of the excluded values -8, -5, -3, 0");
    FamilyPrediction p = make_prediction(Family::SimplestSextic, m);
    p.I_pred = 1;
    const bool alpha = (in_residues(m, 8, {0, 5}) && mod_floor(m, 3) != 0) || in_residues(m, 24, {0, 21});
    const Integer three = in_residues(m, 243, {39, 120, 201}) ? 9 : 1;
    if (alpha)
        p.i_pred = {8 * three, 16 * three};
    else
        p.i_pred = {three};
    return p;
}

FamilyPrediction quadratic_predict(const Integer& m)
{
    if (m == 0 || m == 1) not_applicable("m must avoid 0 and 1");
    if (!is_squarefree(m)) not_applicable(m.get_str() + " is not squarefree");
    FamilyPrediction p = make_prediction(Family::Quadratic, m);
    p.I_pred = 1;
    p.i_pred = {Integer(mod_floor(m, 8) == 1 ? 2 : 1)};
    return p;
}

IntPoly family_polynomial(Family f, const Integer& m)
{
    switch (f) {
    case Family::Quadratic:
        return IntPoly(std::vector<Integer>{-m, 0, 1});
    case Family::PureCubic:
        return IntPoly(std::vector<Integer>{-m, 0, 0, 1});
    case Family::SimplestCubic:
        return IntPoly(std::vector<Integer>{-1, -(m + 3), -m, 1});
    case Family::SimplestQuartic:
        return IntPoly(std::vector<Integer>{1, m, -6, -m, 1});
    case Family::LehmerQuintic: {
        const Integer m2 = m * m, m3 = m2 * m, m4 = m3 * m;
        return IntPoly(std::vector<Integer>{1, m3 + 4 * m2 + 10 * m + 10, m4 + 5 * m3 + 11 * m2 + 15 * m + 5,
                                            -(2 * m3 + 6 * m2 + 10 * m + 10), m2, 1});
    }
    case Family::SimplestSextic:
        return IntPoly(std::vector<Integer>{1, 2 * m + 6, 5 * m, -20, -(5 * m + 15), -2 * m, 1});
    case Family::Cubic:
        break;
    }
    throw Error(ErrorKind::InvalidInput, "the cubic family takes two parameters (a, b)");
}

IntPoly family_polynomial(std::string_view name, const Integer& m) { return family_polynomial(family_from_name(name), m); }

FamilyPrediction predict(Family f, const Integer& m)
{
    switch (f) {
    case Family::Quadratic:
        return quadratic_predict(m);
    case Family::PureCubic:
        return pure_cubic_predict(m);
    case Family::SimplestCubic:
        return simplest_cubic_predict(m);
    case Family::SimplestQuartic:
        return simplest_quartic_predict(m);
    case Family::LehmerQuintic:
        return lehmer_quintic_predict(m);
    case Family::SimplestSextic:
        return simplest_sextic_predict(m);
    case Family::Cubic:
        break;
    }
    throw Error(ErrorKind::InvalidInput, "the cubic family takes two parameters (a, b)");
}

std::size_t VerificationReport::applicable() const
{
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.applicable; }));
}

std::size_t VerificationReport::passed() const
{
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [](const auto& r) { return r.applicable && r.pass; }));
}

std::vector<const VerificationRow*> VerificationReport::discrepancies() const
{
    std::vector<const VerificationRow*> out;
    for (const auto& r : rows)
        if (r.applicable && !r.pass) out.push_back(&r);
    return out;
}

std::vector<std::pair<std::string, unsigned>> VerificationReport::alpha_table() const
{
    std::vector<std::pair<std::string, unsigned>> t;
    for (const auto& r : rows)
        if (r.applicable && r.prediction.i_pred.size() > 1) t.emplace_back(r.param, valuation_unchecked(r.i_exact, 2));
    return t;
}

namespace {

// One parameter point; `make` yields the prediction and the polynomial.
template <class Make>
VerificationRow verify_point(Family fam, const std::string& param, Make&& make, const SearchOptions& inner)
{
    VerificationRow row;
    row.family = std::string(family_name(fam));
    row.param = param;
    IntPoly f;
    try {
        auto [pred, poly] = make();
        row.prediction = std::move(pred);
        f = std::move(poly);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotApplicable && e.kind() != ErrorKind::NotAField && e.kind() != ErrorKind::NotReduced)
            throw;
        row.reason = e.what();
        return row;
    }
    if (!is_irreducible_over_q(f)) {
        row.reason = "not applicable: " + f.to_string() + " is reducible";
        return row;
    }
    row.applicable = true;
    const NumberField k = build_field(f);
    const InvariantReport rep = full_report(k, inner);
    row.degree = k.degree();
    row.I_exact = rep.I_K;
    row.i_exact = rep.i_K;
    row.valuations = rep.valuations;
    row.maccluer = rep.maccluer;
    const auto& ip = row.prediction.i_pred;
    row.pass = (!row.prediction.I_pred || *row.prediction.I_pred == rep.I_K) &&
               std::find(ip.begin(), ip.end(), rep.i_K) != ip.end();
    return row;
}

}  // namespace

VerificationReport verify_family(Family f, const std::vector<Integer>& params, const SearchOptions& opt)
{
    if (f == Family::Cubic) throw Error(ErrorKind::InvalidInput, "the cubic family is verified over a box of (a, b)");
    std::vector<Integer> sorted = params;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    VerificationReport report;
    report.family = std::string(family_name(f));
    report.rows.resize(sorted.size());
    const SearchOptions inner{1, opt.cap};
    parallel_for(sorted.size(), opt.jobs, [&](std::size_t i) {
        const Integer& m = sorted[i];
        report.rows[i] = verify_point(
            f, m.get_str(), [&] { return std::make_pair(predict(f, m), family_polynomial(f, m)); }, inner);
    });
    return report;
}

VerificationReport verify_family(Family f, const Integer& lo, const Integer& hi, const SearchOptions& opt)
{
    if (hi < lo) throw Error(ErrorKind::InvalidInput, "empty range");
    if (f != Family::Cubic) {
        std::vector<Integer> params;
        for (Integer m = lo; m <= hi; ++m) params.push_back(m);
        return verify_family(f, params, opt);
    }
    const unsigned long width = Integer(hi - lo + 1).get_ui();
    VerificationReport report;
    report.family = std::string(family_name(f));
    report.rows.resize(width * width);
    const SearchOptions inner{1, opt.cap};
    parallel_for(width * width, opt.jobs, [&](std::size_t i) {
        const Integer a = lo + static_cast<unsigned long>(i / width), b = lo + static_cast<unsigned long>(i % width);
        report.rows[i] = verify_point(
            f, a.get_str() + "," + b.get_str(),
            [&] { return std::make_pair(cubic_predict(a, b), cubic_polynomial(a, b)); }, inner);
    });
    return report;
}

}  // namespace indexlab
