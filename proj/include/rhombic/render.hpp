#pragma once

#include "rhombic/assemblee.hpp"
#include "rhombic/bijection.hpp"
#include "rhombic/tableau.hpp"

#include <string>

namespace rhombic {

// SVG output uses 40 px unit edges and a 20 px margin. Strip lines follow the usual colours:
// west-strips red dashed, north-strips blue dotted, northwest-strips green solid.
std::string render_tableau_svg(const Tableau& t);
std::string render_trace_svg(const LabeledTableau& lt);
std::string render_assemblee_svg(const Assemblee& a);

// One character per tile (a, b, q or .) placed at twice the tile centroid.
std::string render_tableau_ascii(const Tableau& t);
std::string render_trace_ascii(const LabeledTableau& lt);
std::string render_assemblee_ascii(const Assemblee& a);

} // namespace rhombic
