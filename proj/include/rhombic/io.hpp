#pragma once

#include "rhombic/algebra.hpp"
#include "rhombic/asep.hpp"
#include "rhombic/assemblee.hpp"
#include "rhombic/bijection.hpp"
#include "rhombic/shapes.hpp"
#include "rhombic/tableau.hpp"

#include <json.hpp>

namespace rhombic {

// Insertion order is kept so emitted documents are stable and readable.
using Json = nlohmann::ordered_json;

// [{"ea": int, "eb": int, "eq": int, "c": "num/den"}, ...] sorted by (ea, eb, eq).
Json polynomial_to_json(const LaurentPolynomial& p);
LaurentPolynomial polynomial_from_json(const Json& j);

// {"kind": "square"|"tall"|"short", "anchor": [x, y]}
Json tile_to_json(const Tile& t);
Tile tile_from_json(const Json& j);

// {"word": "...", "tiles": [...]} with tiles in JSON order.
Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

// Tiling JSON plus "filling": ["a"|"b"|"q"|".", ...] aligned with "tiles".
Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

// [[2,10,12,7],[5,9,1,8,6],[3,11,4]]
Json assemblee_to_json(const Assemblee& a);
Assemblee assemblee_from_json(const Json& j);

// {"tableau": ..., "final_block_end": b, "edges": [{"edge": [[x1,y1],[x2,y2]], "label": [lo,hi]|null}]}
Json trace_to_json(const LabeledTableau& lt);
LabeledTableau trace_from_json(const Json& j);

// {"n", "r", "params": {"alpha","beta","q"}, "states": [{"word","pi","tableau_ratio","match"}], "pass"}
Json report_to_json(const StationarityReport& r);
StationarityReport report_from_json(const Json& j);

// {"r": int, "f": [...], "g": [...]}
std::pair<TruncatedSubexceedant, GreenPointChoice> insertion_input_from_json(const Json& j);
Json insertion_to_json(const Insertion& ins);

} // namespace rhombic
