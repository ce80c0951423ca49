#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "lsft/dga.hpp"

namespace lsft {

using nlohmann::json;

json poly_to_json(const Poly& x);
Poly poly_from_json(const json& j, Discipline d);

json dga_to_json(const Dga& a);
Dga dga_from_json(const json& j);
json morphism_to_json(const DgaMorphism& m);
DgaMorphism morphism_from_json(const json& j);
json report_to_json(const Report& r);
Report report_from_json(const json& j);

bool same_dga(const Dga& a, const Dga& b);
bool same_morphism(const DgaMorphism& a, const DgaMorphism& b);

// Line-oriented text form.  SFT algebras print delta(x) and d_SFT(x) rows,
// other algebras print d(x) rows.
std::string dga_text(const Dga& a);
std::string morphism_text(const DgaMorphism& m);
std::string report_text(const Report& r);

// Reads back the rows of a text report: section title -> key -> value, where
// keys look like "delta(q0)", "d_SFT(aL12)", "h", "ell(bR12)", "deg(q0)".
// Lines starting with '#' and blank lines are skipped.
using TextTables = std::map<std::string, std::map<std::string, std::string>>;
TextTables parse_text_tables(const std::string& text);

// Compares every row of `want` against `got` as polynomials (or integers for
// deg rows).  Returns one line per mismatch or missing row.
std::vector<std::string> compare_tables(const TextTables& want, const TextTables& got);

}  // namespace lsft
