#pragma once

#include "rhombic/algebra.hpp"
#include "rhombic/shapes.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace rhombic {

// Tile contents of a rhombic alternative tableau. The order is the enumeration order.
enum class Fill : std::uint8_t { Alpha, Beta, Q, Empty };

char fill_char(Fill f); // 'a', 'b', 'q', '.'

// A filling of a tiling; `filling[i]` belongs to `tiling->tiles()[i]`.
struct Tableau {
    std::shared_ptr<const Tiling> tiling;
    std::vector<Fill> filling;

    friend bool operator==(const Tableau& a, const Tableau& b) {
        return a.filling == b.filling && *a.tiling == *b.tiling;
    }
};

// True iff the filling obeys the emptiness rules along west- and north-strips, fills every
// unforced tile, and puts alpha only in tiles with a horizontal edge and beta only in tiles with a
// vertical edge. Throws ValidityError if the filling does not cover every tile.
bool validate_filling(const Tableau& t);

// Visits every valid filling of the tiling. Fillings are produced depth first along the sweep, so
// the visiting order is deterministic but not sorted.
void for_each_filling(const Tiling& tiling, const std::function<void(std::span<const Fill>)>& visit);

std::size_t count_fillings(const Tiling& tiling);

// All valid tableaux on the tiling, sorted lexicographically by filling (alpha < beta < q < empty).
// Throws CapacityError when more than max_results tableaux exist.
std::vector<Tableau> enumerate_fillings(std::shared_ptr<const Tiling> tiling,
                                        std::size_t max_results = 2'000'000);

// alpha^heavy * beta^holes * (product of symbols). Throws ValidityError on an invalid tableau.
LaurentPolynomial tableau_weight(const Tableau& t);

// Sum of tableau weights over all fillings of one tiling.
LaurentPolynomial tiling_weight(const Tiling& tiling);

// Weight generating function of the state, computed on the canonical tiling.
LaurentPolynomial state_weight(const StateWord& word);

// All words of length n with exactly r lights, lexicographic with D < A < E.
std::vector<StateWord> enumerate_states(int n, int r);

// Sum of state_weight over all states with n sites and r lights. `jobs` > 1 splits the states over
// threads; the result does not depend on it.
LaurentPolynomial partition_function(int n, int r, int jobs = 1);

// (alpha beta)^(n-r) C(n,r) prod_{i=first}^{n-1} (1/alpha + 1/beta + i), with first defaulting to r.
LaurentPolynomial closed_form_partition(int n, int r);
LaurentPolynomial closed_form_partition(int n, int r, int first_index);

} // namespace rhombic
