#include "rhombic/bijection.hpp"
#include "rhombic/error.hpp"
#include "rhombic/verify.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rhombic;

namespace {

std::shared_ptr<const Tiling> canon(const StateWord& w) {
    return std::make_shared<const Tiling>(canonical_tiling(build_diagram(w)));
}

LabeledTableau forward(const Assemblee& a) { return fusion_exchange(a, canon(word_of_assemblee(a))); }

std::size_t count(const Tableau& t, Fill f) { return std::count(t.filling.begin(), t.filling.end(), f); }

} // namespace

TEST_CASE("edge labels") {
    const EdgeLabel l = EdgeLabel::range(8, 11);
    CHECK(l.size() == 4);
    CHECK(l.lowest(1) == EdgeLabel::single(8));
    CHECK(l.highest(2) == EdgeLabel::range(10, 11));
    CHECK(EdgeLabel::range(3, 2).empty());
    CHECK(to_string(l) == "(8..11)");
    CHECK(to_string(EdgeLabel::single(3)) == "(3)");
    CHECK(to_string(EdgeLabel()) == "()");
    CHECK(succeeds(EdgeLabel::single(12), l));
    CHECK_FALSE(succeeds(l, EdgeLabel::single(12)));
    CHECK_FALSE(succeeds(EdgeLabel(), l));
}

TEST_CASE("running example through fusion-exchange") {
    const Assemblee a = running_example_assemblee();
    const LabeledTableau lt = fusion_exchange(a, running_example_tiling());
    CHECK(lt.tableau.filling.size() == 25);
    CHECK(count(lt.tableau, Fill::Alpha) == 3);
    CHECK(count(lt.tableau, Fill::Beta) == 2);
    CHECK(count(lt.tableau, Fill::Q) == 15);
    CHECK(count(lt.tableau, Fill::Empty) == 5);
    CHECK(tableau_weight(lt.tableau) == LaurentPolynomial::monomial({7, 7, 15}));
    CHECK(label_passing(lt.tableau) == a);

    const TerminationReport rep = termination_report(lt);
    CHECK(rep.ok());
    CHECK(rep.final_block_end == 4);
    CHECK(label_maxima(rep.horizontal) == std::vector<int>{12, 11});
    CHECK(label_maxima(rep.vertical) == std::vector<int>{3, 2});
    CHECK(label_maxima(rep.diagonal) == std::vector<int>{7, 6});

    // The canonical tiling carries the same alpha and beta but one q fewer.
    const LabeledTableau c = forward(a);
    CHECK(count(c.tableau, Fill::Alpha) == 3);
    CHECK(count(c.tableau, Fill::Beta) == 2);
    CHECK(count(c.tableau, Fill::Q) == 14);
    CHECK(label_passing(c.tableau) == a);
}

TEST_CASE("degenerate strips") {
    const LabeledTableau d = forward(canonicalize({{1, 2}}));
    CHECK(d.tableau.filling.empty());
    CHECK(tableau_weight(d.tableau) == LaurentPolynomial::alpha());
    CHECK(d.termination == std::vector<EdgeLabel>{EdgeLabel::single(1)});

    const LabeledTableau e = forward(canonicalize({{2, 1}}));
    CHECK(tableau_weight(e.tableau) == LaurentPolynomial::beta());
    const TerminationReport re = termination_report(e);
    CHECK(re.horizontal == std::vector<EdgeLabel>{EdgeLabel::single(2)});
    CHECK(re.vertical.empty());
    CHECK(re.diagonal.empty());

    const TerminationReport rs = termination_report(forward(canonicalize({{3}, {2}, {1}})));
    CHECK(rs.diagonal == std::vector<EdgeLabel>{EdgeLabel::single(3), EdgeLabel::single(2)});
    CHECK(rs.horizontal.empty());
    CHECK(rs.vertical.empty());
    CHECK(rs.final_block_end == 1);
}

TEST_CASE("labels travel with their strip") {
    // The largest element of a label is the SE label of the strip that carries it.
    for (int size = 1; size <= 6; ++size)
        for (int k = 1; k <= size; ++k)
            for (const Assemblee& a : enumerate_assemblees(size, k)) {
                const LabeledTableau lt = forward(a);
                const auto reading = a.flattened();
                for (const auto& [edge, label] : lt.labels) {
                    if (label.empty())
                        continue;
                    const std::size_t strip = lt.strip_of.at(edge);
                    CHECK(label.hi() == reading[strip]);
                }
                CHECK(termination_report(lt).ok());
            }
}

TEST_CASE("label-passing forests") {
    const LabeledTableau lt = fusion_exchange(running_example_assemblee(), running_example_tiling());
    const Forest f = build_forest(lt.tableau);
    std::vector<std::pair<RootClass, int>> roots;
    for (const Root& r : f.roots)
        roots.push_back({r.cls, r.leaves});
    using enum RootClass;
    CHECK(roots == std::vector<std::pair<RootClass, int>>{
                       {West, 2}, {West, 1}, {Northwest, 1}, {Northwest, 2}, {Northwest, 1}, {North, 4}, {North, 1}});
    CHECK_FALSE(f.roots[2].edge.has_value());
    CHECK(f.external.size() == 11);

    auto shape = [](const char* w, std::vector<Fill> fill) {
        const Forest g = build_forest({canon(parse_word(w)), std::move(fill)});
        std::vector<std::pair<RootClass, int>> out;
        for (const Root& r : g.roots)
            out.push_back({r.cls, r.leaves});
        return out;
    };
    CHECK(shape("ED", {}) == std::vector<std::pair<RootClass, int>>{{West, 1}, {Northwest, 1}, {North, 1}});
    CHECK(shape("DE", {Fill::Q}) == std::vector<std::pair<RootClass, int>>{{West, 1}, {Northwest, 1}, {North, 1}});
    CHECK(shape("DE", {Fill::Alpha}) == std::vector<std::pair<RootClass, int>>{{West, 2}, {Northwest, 1}});
}

TEST_CASE("label passing on trivial tableaux") {
    CHECK(label_passing({canon(parse_word("E")), {}}) == canonicalize({{2, 1}}));
    CHECK(label_passing({canon(parse_word("D")), {}}) == canonicalize({{1, 2}}));
    CHECK_THROWS_AS(label_passing({canon(parse_word("DE")), {Fill::Empty}}), ValidityError);
}

TEST_CASE("shape mismatch") {
    CHECK_THROWS_AS(fusion_exchange(canonicalize({{1, 2}}), canon(parse_word("E"))), ShapeError);
    const auto t = canon(parse_word("DE"));
    CHECK_THROWS_AS(fusion_exchange(canonicalize({{2, 1, 3}}), t, std::span<const Crossing>{}), ValidityError);
}
