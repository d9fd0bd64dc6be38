#include "indexlab/report_io.hpp"

#include <sstream>

namespace indexlab {

namespace {

using nlohmann::json;

json decimal_list(const std::vector<Integer>& xs)
{
    json a = json::array();
    for (const auto& x : xs) a.push_back(x.get_str());
    return a;
}

std::string joined(const std::vector<Integer>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + xs[i].get_str();
    return s;
}

json valuations_json(const PrimeValuations& v) { return json{{"v_i", v.v_i}, {"v_I", v.v_I}}; }

}  // namespace

json splitting_json(const SplittingType& s)
{
    json a = json::array();
    for (const auto& [e, f] : s.pairs) a.push_back(json::array({e, f}));
    return a;
}

std::string integer_set(const std::vector<Integer>& xs) { return "{" + joined(xs) + "}"; }

json invariants_json(const NumberField& k, const InvariantReport& r)
{
    json splitting = json::object();
    for (const auto& [p, s] : r.splittings) splitting[std::to_string(p)] = splitting_json(s);
    json vals = json::object();
    for (const auto& [p, v] : r.valuations) vals[std::to_string(p)] = valuations_json(v);
    json support = json::array();
    for (unsigned p : r.maccluer) support.push_back(p);
    return json{
        {"field",
         {{"poly", decimal_list(k.defining_poly().coeffs())},
          {"disc", r.field_disc.get_str()},
          {"degree", k.degree()},
          {"basis", {{"denominator", k.order().denom.get_str()}, {"rows", [&] {
                          json rows = json::array();
                          for (std::size_t i = 0; i < k.order().basis.rows(); ++i)
                              rows.push_back(decimal_list(k.order().basis.row(i)));
                          return rows;
                      }()}}}}},
        {"splitting", splitting},
        {"invariants", {{"i_K", r.i_K.get_str()}, {"I_K", r.I_K.get_str()}, {"valuations", vals}, {"maccluer_support", support}}},
        {"witness", {{"coords", decimal_list(r.witness.coords)}, {"char_poly", decimal_list(r.witness_char_poly.coeffs())}}},
    };
}

std::string invariants_tsv(const NumberField& k, const InvariantReport& r)
{
    std::ostringstream out;
    out << "poly\t" << k.defining_poly().to_string() << "\n";
    out << "degree\t" << k.degree() << "\n";
    out << "disc\t" << r.field_disc.get_str() << "\n";
    for (const auto& [p, s] : r.splittings) out << "splitting_" << p << "\t" << s.to_string() << "\n";
    out << "i_K\t" << r.i_K.get_str() << "\n";
    out << "I_K\t" << r.I_K.get_str() << "\n";
    for (const auto& [p, v] : r.valuations) out << "valuation_" << p << "\t" << v.v_i << "," << v.v_I << "\n";
    out << "maccluer_support\t";
    bool first = true;
    for (unsigned p : r.maccluer) {
        out << (first ? "" : ",") << p;
        first = false;
    }
    out << "\n";
    out << "witness_coords\t" << joined(r.witness.coords) << "\n";
    out << "witness_char_poly\t" << r.witness_char_poly.to_string() << "\n";
    return out.str();
}

namespace {

std::string pass_cell(const VerificationRow& row) { return !row.applicable ? "-" : row.pass ? "yes" : "no"; }

std::string i_pred_cell(const VerificationRow& row) { return row.applicable ? integer_set(row.prediction.i_pred) : "-"; }

std::string I_pred_cell(const VerificationRow& row)
{
    return row.applicable && row.prediction.I_pred ? row.prediction.I_pred->get_str() : "-";
}

}  // namespace

json verification_json(const VerificationReport& r)
{
    json rows = json::array();
    for (const auto& row : r.rows) {
        json j{{"m", row.param}, {"applicable", row.applicable}, {"pass", pass_cell(row)}};
        if (!row.applicable) {
            j["reason"] = row.reason;
        } else {
            j["I_pred"] = I_pred_cell(row);
            j["i_pred_set"] = decimal_list(row.prediction.i_pred);
            j["I_exact"] = row.I_exact.get_str();
            j["i_exact"] = row.i_exact.get_str();
        }
        rows.push_back(std::move(j));
    }
    json alpha = json::array();
    for (const auto& [m, a] : r.alpha_table()) alpha.push_back(json{{"m", m}, {"alpha", a}});
    json disc = json::array();
    for (const auto* d : r.discrepancies()) disc.push_back(d->param);
    return json{{"family", r.family},
                {"rows", rows},
                {"summary",
                 {{"total", r.rows.size()}, {"applicable", r.applicable()}, {"passed", r.passed()}, {"discrepancies", disc}}},
                {"alpha_table", alpha}};
}

std::string verification_tsv(const VerificationReport& r)
{
    std::ostringstream out;
    out << "family\tm\tapplicable\tI_pred\tI_exact\ti_pred_set\ti_exact\tpass\n";
    for (const auto& row : r.rows) {
        out << row.family << "\t" << row.param << "\t" << (row.applicable ? "yes" : "no") << "\t" << I_pred_cell(row) << "\t"
            << (row.applicable ? row.I_exact.get_str() : "-") << "\t" << i_pred_cell(row) << "\t"
            << (row.applicable ? row.i_exact.get_str() : "-") << "\t" << pass_cell(row) << "\n";
    }
    return out.str();
}

json comparison_json(const IntPoly& f1, const IntPoly& f2, unsigned p, const FieldComparison& c)
{
    return json{{"prime", p},
                {"fields",
                 json::array({{{"poly", decimal_list(f1.coeffs())}, {"splitting", splitting_json(c.split1)}, {"valuations", valuations_json(c.val1)}},
                              {{"poly", decimal_list(f2.coeffs())}, {"splitting", splitting_json(c.split2)}, {"valuations", valuations_json(c.val2)}}})},
                {"same_splitting", c.same_splitting},
                {"splitting_insufficient", c.splitting_insufficient}};
}

std::string comparison_tsv(const IntPoly& f1, const IntPoly& f2, unsigned p, const FieldComparison& c)
{
    std::ostringstream out;
    out << "prime\t" << p << "\n";
    out << "poly_1\t" << f1.to_string() << "\n";
    out << "splitting_1\t" << c.split1.to_string() << "\n";
    out << "valuations_1\t" << c.val1.v_i << "," << c.val1.v_I << "\n";
    out << "poly_2\t" << f2.to_string() << "\n";
    out << "splitting_2\t" << c.split2.to_string() << "\n";
    out << "valuations_2\t" << c.val2.v_i << "," << c.val2.v_I << "\n";
    out << "same_splitting\t" << (c.same_splitting ? "yes" : "no") << "\n";
    out << "splitting_insufficient\t" << (c.splitting_insufficient ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace indexlab
