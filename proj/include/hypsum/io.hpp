#pragma once

#include <string>
#include <vector>

#include "hypsum/coefficients.hpp"
#include "hypsum/combinatorics.hpp"
#include "hypsum/verify.hpp"

namespace hypsum::io {

enum class TableFormat { csv, json, bfile };

// csv:   one "m,k,value" line per entry, rows ascending in m then k.
// json:  {"kind": "a"|"c", "max_m": M, "rows": [{"m": 2, "entries":
//        [{"k": 2, "num": "1", "den": "1"}]}, ...]}, integers as decimal
//        strings.
// bfile: "index value" pairs, 1-based, triangle flattened in (m, k) order.
//        Only valid for integer-valued tables; rejects kind a.
std::string render_coeff_table(const CoeffTriangle& t, TableFormat f);

std::string render_stirling_table(const StirlingTriangle& t, TableFormat f);

// Inverse of the json rendering above.
CoeffTriangle coeff_table_from_json(const std::string& text);

std::string render_runs_text(const std::vector<verify::FamilyRun>& runs);
std::string render_runs_json(const std::vector<verify::FamilyRun>& runs);

}  // namespace hypsum::io
