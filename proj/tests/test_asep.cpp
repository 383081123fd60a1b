#include "rhombic/asep.hpp"
#include "rhombic/error.hpp"
#include "rhombic/tableau.hpp"

#include <doctest.h>

using namespace rhombic;

namespace {

const Rational half(1, 2), third(1, 3), two_fifths(2, 5);

std::size_t index_of(const MarkovGenerator& g, const char* w) {
    for (std::size_t i = 0; i < g.size(); ++i)
        if (g.states[i].to_string() == w)
            return i;
    FAIL("missing state");
    return 0;
}

} // namespace

TEST_CASE("generator rates") {
    const MarkovGenerator g = build_generator(1, 0, half, third, two_fifths);
    const auto d = index_of(g, "D"), e = index_of(g, "E");
    CHECK(g.rate(e, d) == half);
    CHECK(g.rate(d, e) == third);

    const MarkovGenerator h = build_generator(2, 1, half, third, two_fifths);
    CHECK(h.rate(index_of(h, "DA"), index_of(h, "AD")) == 1);
    CHECK(h.rate(index_of(h, "AD"), index_of(h, "DA")) == two_fifths);
    CHECK(h.rate(index_of(h, "AE"), index_of(h, "EA")) == 1);
    CHECK(h.rate(index_of(h, "EA"), index_of(h, "AE")) == two_fifths);

    const MarkovGenerator aa = build_generator(2, 2, half, third, two_fifths);
    REQUIRE(aa.size() == 1);
    CHECK(aa.rows[0].empty());

    // Rows sum to zero.
    const MarkovGenerator big = build_generator(4, 1, half, third, two_fifths);
    for (const auto& row : big.rows) {
        Rational sum = 0;
        for (const auto& [j, v] : row)
            sum += v;
        CHECK(sum == 0);
    }
}

TEST_CASE("parameter checks") {
    CHECK_THROWS_AS(build_generator(2, 0, 0, third, 1), ParameterError);
    CHECK_THROWS_AS(build_generator(2, 0, half, -third, 1), ParameterError);
    CHECK_THROWS_AS(build_generator(2, 0, half, third, -1), ParameterError);
    CHECK_NOTHROW(build_generator(2, 0, half, third, 0));
}

TEST_CASE("stationary distributions") {
    const MarkovGenerator g = build_generator(1, 0, half, third, 1);
    const auto pi = stationary_distribution(g);
    CHECK(pi[index_of(g, "D")] == Rational(3, 5));
    CHECK(pi[index_of(g, "E")] == Rational(2, 5));

    CHECK(stationary_distribution(build_generator(2, 2, half, third, 1)) == std::vector<Rational>{1});

    // pi G = 0 and sum(pi) = 1, checked directly.
    const MarkovGenerator h = build_generator(4, 2, Rational(2, 7), Rational(3, 5), third);
    const auto p = stationary_distribution(h);
    Rational total = 0;
    std::vector<Rational> flow(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
        total += p[i];
        for (const auto& [j, v] : h.rows[i])
            flow[j] += p[i] * v;
    }
    CHECK(total == 1);
    for (const auto& f : flow)
        CHECK(f == 0);

    // Two states with no transitions between them.
    MarkovGenerator split;
    split.states = {parse_word("D"), parse_word("E")};
    split.rows.resize(2);
    CHECK_THROWS_AS(stationary_distribution(split), StructureError);
}

TEST_CASE("stationarity against tableau weights") {
    const StationarityReport r = verify_stationarity(1, 0, half, third, two_fifths);
    CHECK(r.pass);
    CHECK(r.states.size() == 2);
    CHECK(verify_stationarity(2, 1, half, third, two_fifths).pass);
    const StationarityReport s = verify_stationarity(3, 1, Rational(2, 7), Rational(3, 5), third);
    CHECK(s.pass);
    CHECK(s.states.size() == 12);

    const StationarityReport ones = verify_stationarity(2, 0, 1, 1, 1);
    CHECK(ones.pass);
    const Rational z = partition_function(2, 0).evaluate(1, 1, 1);
    for (const auto& row : ones.states) {
        CHECK(row.pi == state_weight(row.word).evaluate(1, 1, 1) / z);
        CHECK(row.match);
    }
}
