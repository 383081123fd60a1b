#include "rhombic/error.hpp"
#include "rhombic/shapes.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace rhombic;

TEST_CASE("word parsing and counts") {
    const StateWord w = parse_word("DDEADEEEADE");
    CHECK(w.size() == 11);
    CHECK(w.heavy() == 4);
    CHECK(w.light() == 2);
    CHECK(w.holes() == 5);
    CHECK(w.to_string() == "DDEADEEEADE");

    const StateWord e = parse_word("E");
    CHECK((e.size() == 1 && e.heavy() == 0 && e.light() == 0 && e.holes() == 1));
    const StateWord da = parse_word("DA");
    CHECK((da.heavy() == 1 && da.light() == 1 && da.holes() == 0));

    CHECK_THROWS_AS(parse_word(""), ParseError);
    try {
        parse_word("DAxE");
        FAIL("expected a parse error");
    } catch (const ParseError& err) {
        CHECK(err.position() == 2);
    }
}

TEST_CASE("diagram area against the shoelace oracle") {
    CHECK(build_diagram(parse_word("DE")).area == 1);
    CHECK(build_diagram(parse_word("ED")).area == 0);
    const RhombicDiagram big = build_diagram(parse_word("DDEADEEEADE"));
    CHECK(big.area == 25);
    CHECK(oracle::shoelace_area(big) == 25);
    CHECK(big.sw_corner() == Point{-7, -6});

    for (int n = 0; n <= 6; ++n)
        for (const auto& w : oracle::all_words(n))
            CHECK(oracle::shoelace_area(build_diagram(w)) == build_diagram(w).area);
}

TEST_CASE("canonical tiling tile budget") {
    auto budget = [](const Tiling& t) {
        std::map<TileKind, int> m;
        for (const Tile& tile : t.tiles())
            ++m[tile.kind];
        return std::array<int, 3>{m[TileKind::Square], m[TileKind::Tall], m[TileKind::Short]};
    };
    CHECK(budget(canonical_tiling(build_diagram(parse_word("DDEADEEEADE")))) == std::array<int, 3>{15, 5, 5});
    for (int n = 0; n <= 6; ++n)
        for (const auto& w : oracle::all_words(n)) {
            // heavy-before-hole pairs give squares, heavy-before-light tall tiles, light-before-hole short ones.
            std::array<int, 3> pairs{0, 0, 0};
            for (int i = 0; i < w.size(); ++i)
                for (int j = i + 1; j < w.size(); ++j) {
                    if (w[i] == Site::Heavy && w[j] == Site::Hole) ++pairs[0];
                    if (w[i] == Site::Heavy && w[j] == Site::Light) ++pairs[1];
                    if (w[i] == Site::Light && w[j] == Site::Hole) ++pairs[2];
                }
            CHECK(budget(canonical_tiling(build_diagram(w))) == pairs);
        }
}

TEST_CASE("small canonical tilings") {
    CHECK(canonical_tiling(build_diagram(parse_word("ED"))).size() == 0);
    const Tiling de = canonical_tiling(build_diagram(parse_word("DE")));
    REQUIRE(de.size() == 1);
    CHECK(de.tiles()[0].kind == TileKind::Square);
    CHECK(de.tiles()[0].anchor == Point{0, 0});
    const Tiling da = canonical_tiling(build_diagram(parse_word("DA")));
    REQUIRE(da.size() == 1);
    CHECK(da.tiles()[0].kind == TileKind::Tall);
}

TEST_CASE("tiling validation rejects bad covers") {
    const RhombicDiagram de = build_diagram(parse_word("DE"));
    CHECK_THROWS_AS(Tiling(de, {}), ValidityError);
    CHECK_THROWS_AS(Tiling(de, {Tile{TileKind::Tall, {0, 0}}}), ValidityError);
    CHECK_THROWS_AS(Tiling(de, {Tile{TileKind::Square, {0, 0}}, Tile{TileKind::Square, {0, 0}}}), ValidityError);
    CHECK_NOTHROW(Tiling(de, {Tile{TileKind::Square, {0, 0}}}));
}

TEST_CASE("tiling enumeration against the exact-cover oracle") {
    CHECK(enumerate_tilings(build_diagram(parse_word("DE"))).size() == 1);
    CHECK(enumerate_tilings(build_diagram(parse_word("ED"))).size() == 1);
    CHECK(enumerate_tilings(build_diagram(parse_word("ED"))).front().size() == 0);
    CHECK(enumerate_tilings(build_diagram(parse_word("DAE"))).size() == 2);
    CHECK(oracle::exact_cover_tilings(build_diagram(parse_word("DAE"))).size() == 2);

    for (int n = 0; n <= 5; ++n)
        for (const auto& w : oracle::all_words(n)) {
            const RhombicDiagram d = build_diagram(w);
            std::set<std::vector<Tile>> mine;
            for (const Tiling& t : enumerate_tilings(d))
                mine.insert(std::vector<Tile>(t.tiles().begin(), t.tiles().end()));
            const auto theirs = oracle::exact_cover_tilings(d);
            CHECK_MESSAGE(mine == theirs, w.to_string());
        }

    const RhombicDiagram ex = build_diagram(parse_word("DDEADEEEADE"));
    CHECK_THROWS_AS(enumerate_tilings(ex), CapacityError);
    CHECK(enumerate_tilings(ex, ex.area).size() == 54);
    CHECK(oracle::exact_cover_tilings(ex).size() == 54);
}

TEST_CASE("enumeration output is sorted and unique") {
    const auto all = enumerate_tilings(build_diagram(parse_word("DDAEAE")));
    for (std::size_t i = 1; i < all.size(); ++i) {
        const auto& x = all[i - 1].tiles();
        const auto& y = all[i].tiles();
        CHECK(std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), json_order));
    }
}

TEST_CASE("hexagon flips") {
    const auto dae = enumerate_tilings(build_diagram(parse_word("DAE")));
    REQUIRE(dae.size() == 2);
    const auto hex = flippable_hexagons(dae[0]);
    REQUIRE(hex.size() == 1);
    CHECK(apply_flip(dae[0], hex[0]) == dae[1]);
    CHECK(apply_flip(apply_flip(dae[0], hex[0]), hex[0]) == dae[0]);

    const Tiling de = canonical_tiling(build_diagram(parse_word("DE")));
    CHECK(flippable_hexagons(de).empty());
    CHECK_THROWS_AS(apply_flip(de, Point{-1, -1}), InvalidFlip);

    // Involution on every hexagon of every tiling of a mid-sized word.
    for (const Tiling& t : enumerate_tilings(build_diagram(parse_word("DDAEAE"))))
        for (Point c : flippable_hexagons(t))
            CHECK(apply_flip(apply_flip(t, c), c) == t);
}

TEST_CASE("random sweeps visit every tile once") {
    std::mt19937_64 rng(3);
    const SweepChooser pick = [&](std::span<const std::size_t> c) {
        return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng);
    };
    for (const Tiling& t : enumerate_tilings(build_diagram(parse_word("DDAEAE")))) {
        for (int i = 0; i < 10; ++i) {
            const auto order = sweep_tiling(t, pick);
            std::vector<std::size_t> seen;
            for (const Crossing& c : order) {
                seen.push_back(c.tile);
                CHECK(t.tiles()[c.tile].anchor == c.origin);
            }
            std::sort(seen.begin(), seen.end());
            CHECK(seen.size() == t.size());
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
        }
    }
}

TEST_CASE("strip decomposition") {
    const StripDecomposition ex = compute_strips(canonical_tiling(build_diagram(parse_word("DDEADEEEADE"))));
    CHECK(ex.west.size() == 4);
    CHECK(ex.north.size() == 5);
    CHECK(ex.northwest.size() == 2);

    const StripDecomposition ed = compute_strips(canonical_tiling(build_diagram(parse_word("ED"))));
    REQUIRE(ed.west.size() == 1);
    REQUIRE(ed.north.size() == 1);
    CHECK(ed.west[0].tiles.empty());
    CHECK(ed.north[0].tiles.empty());
    // With no tiles the SE edge is its own NW edge.
    CHECK(ed.west[0].se_edge == ed.west[0].nw_edge);

    const StripDecomposition de = compute_strips(canonical_tiling(build_diagram(parse_word("DE"))));
    REQUIRE(de.west.size() == 1);
    REQUIRE(de.north.size() == 1);
    CHECK(de.west[0].tiles == std::vector<std::size_t>{0});
    CHECK(de.north[0].tiles == std::vector<std::size_t>{0});

    // Every tile lies on exactly two strips.
    const Tiling t = enumerate_tilings(build_diagram(parse_word("DADEAE"))).back();
    const StripDecomposition s = compute_strips(t);
    std::vector<int> hits(t.size());
    for (const auto* group : {&s.west, &s.north, &s.northwest})
        for (const Strip& strip : *group)
            for (std::size_t i : strip.tiles)
                ++hits[i];
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 2; }));
}
