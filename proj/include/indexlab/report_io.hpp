#pragma once

#include <string>

#include <json.hpp>

#include "indexlab/families.hpp"
#include "indexlab/invariants.hpp"
#include "indexlab/number_field.hpp"
#include "indexlab/search.hpp"

namespace indexlab {

/* Serialization for the command-line front end. Objects use sorted keys and
 * big integers are written as decimal strings, so output is byte-stable. */

nlohmann::json invariants_json(const NumberField& k, const InvariantReport& r);
/// key<TAB>value lines.
std::string invariants_tsv(const NumberField& k, const InvariantReport& r);

nlohmann::json verification_json(const VerificationReport& r);
/// Header plus one line per parameter: family, m, applicable, I_pred,
/// I_exact, i_pred_set, i_exact, pass.
std::string verification_tsv(const VerificationReport& r);

nlohmann::json comparison_json(const IntPoly& f1, const IntPoly& f2, unsigned p, const FieldComparison& c);
std::string comparison_tsv(const IntPoly& f1, const IntPoly& f2, unsigned p, const FieldComparison& c);

/// "[[1,1],[2,1]]" style pairs.
nlohmann::json splitting_json(const SplittingType& s);
/// "{8,16}"
std::string integer_set(const std::vector<Integer>& xs);

}  // namespace indexlab
