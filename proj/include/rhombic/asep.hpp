#pragma once

#include "rhombic/algebra.hpp"
#include "rhombic/shapes.hpp"

#include <map>
#include <vector>

namespace rhombic {

// Continuous-time generator of the two-species exclusion process on n sites with r light particles.
struct MarkovGenerator {
    std::vector<StateWord> states;                    // enumerate_states(n, r) order
    std::vector<std::map<std::size_t, Rational>> rows; // rows[i][j]: rate of i -> j; diagonal = -row sum

    Rational rate(std::size_t from, std::size_t to) const;
    std::size_t size() const { return states.size(); }
};

// Bulk: adjacent swaps at rate 1 when the heavier particle is on the left, q when it is on the
// right (Heavy > Light > Hole). Boundary: a hole on site 1 becomes heavy at rate alpha, a heavy
// particle on site n leaves at rate beta. Throws ParameterError unless alpha, beta > 0 and q >= 0.
MarkovGenerator build_generator(int n, int r, const Rational& alpha, const Rational& beta, const Rational& q);

// Exact pi with pi G = 0 and sum(pi) = 1, by fraction-free elimination on the transposed generator
// with its last row replaced by the normalization. Throws StructureError for a reducible chain.
std::vector<Rational> stationary_distribution(const MarkovGenerator& g);

struct StationarityReport {
    struct Row {
        StateWord word;
        Rational pi;
        Rational tableau_ratio; // weight(X) / Z at the same parameters
        bool match = false;
    };

    int n = 0;
    int r = 0;
    Rational alpha;
    Rational beta;
    Rational q;
    std::vector<Row> states;
    bool pass = false;
};

// Compares the exact stationary vector against weight(X)/Z_{n,r} for every state.
StationarityReport verify_stationarity(int n, int r, const Rational& alpha, const Rational& beta,
                                       const Rational& q);

} // namespace rhombic
