#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indexlab/int_poly.hpp"
#include "indexlab/integer.hpp"
#include "indexlab/invariants.hpp"

namespace indexlab {

enum class Family {
    Quadratic,       // x^2 - m
    Cubic,           // x^3 - a x + b, parameters (a, b)
    PureCubic,       // x^3 - d
    SimplestCubic,   // x^3 - m x^2 - (m+3) x - 1
    SimplestQuartic, // x^4 - m x^3 - 6 x^2 + m x + 1
    LehmerQuintic,
    SimplestSextic,  // x^6 - 2m x^5 - (5m+15) x^4 - 20 x^3 + 5m x^2 + (2m+6) x + 1
};

std::string_view family_name(Family f);
/// Throws UnknownFamily.
Family family_from_name(std::string_view name);
const std::vector<Family>& all_families();

/// x^3 - a x + b with its discriminant split at 2 and 3.
struct CubicForm {
    Integer a, b;
    Integer delta;           // 4a^3 - 27b^2
    unsigned s2 = 0, s3 = 0; // v_2(delta), v_3(delta)
    Integer delta2, delta3;  // delta / 2^s2, delta / 3^s3

    /// Throws NotAField when delta = 0.
    static CubicForm make(const Integer& a, const Integer& b);
    bool reduced() const;
};

struct FamilyPrediction {
    std::string family;
    std::string param;
    bool applicable = true;
    std::string reason;
    /// Unset when the formula says nothing about I(K).
    std::optional<Integer> I_pred;
    /// Ascending; a singleton except for the sextic 2-part.
    std::vector<Integer> i_pred;
};

/// Divides out (p^2, p^3) while some prime has v_p(a) >= 2 and v_p(b) >= 3.
/// Throws NotAField for a reducible x^3 - a x + b.
std::pair<Integer, Integer> cubic_reduce(const Integer& a, const Integer& b);

/// Throws NotReduced or NotAField.
FamilyPrediction cubic_predict(const Integer& a, const Integer& b);
/// Throws NotAField for cubes (including +-1), NotApplicable otherwise
/// when d is not cube-free.
FamilyPrediction pure_cubic_predict(const Integer& d);
FamilyPrediction simplest_cubic_predict(const Integer& m);
/// Negative m is replaced by |m|. Throws NotApplicable for m in {0, 3} or
/// when m^2 + 16 has an odd square factor.
FamilyPrediction simplest_quartic_predict(const Integer& m);
/// Throws NotApplicable when p^2 | m^4+5m^3+15m^2+25m+25 for a prime p != 5.
FamilyPrediction lehmer_quintic_predict(const Integer& m);
/// Throws NotApplicable for m in {-8, -5, -3, 0}.
FamilyPrediction simplest_sextic_predict(const Integer& m);
/// Throws NotApplicable unless m is squarefree and m not in {0, 1}.
FamilyPrediction quadratic_predict(const Integer& m);

/// Single-parameter families; Cubic takes (a, b) via cubic_polynomial.
IntPoly family_polynomial(Family f, const Integer& m);
IntPoly family_polynomial(std::string_view name, const Integer& m);
IntPoly cubic_polynomial(const Integer& a, const Integer& b);

FamilyPrediction predict(Family f, const Integer& m);

struct VerificationRow {
    std::string family;
    std::string param;
    bool applicable = false;
    std::string reason;
    FamilyPrediction prediction;
    // Filled for applicable rows.
    int degree = 0;
    Integer I_exact, i_exact;
    std::map<unsigned, PrimeValuations> valuations;
    std::set<unsigned> maccluer;
    bool pass = false;
};

struct VerificationReport {
    std::string family;
    std::vector<VerificationRow> rows;  // sorted by parameter

    std::size_t applicable() const;
    std::size_t passed() const;
    std::vector<const VerificationRow*> discrepancies() const;
    bool ok() const { return discrepancies().empty(); }
    /// (parameter, measured v_2(i(K))) in row order, for rows whose
    /// prediction allows two 2-parts (the sextic {8, 16} case).
    std::vector<std::pair<std::string, unsigned>> alpha_table() const;
};

/// Verifies every m in [lo, hi]; for Cubic, every (a, b) in [lo, hi]^2.
VerificationReport verify_family(Family f, const Integer& lo, const Integer& hi, const SearchOptions& opt = {});
VerificationReport verify_family(Family f, const std::vector<Integer>& params, const SearchOptions& opt = {});

}  // namespace indexlab
